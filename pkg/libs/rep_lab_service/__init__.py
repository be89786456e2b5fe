"""
Representation Lab Service Module

Exact rational matrix representations of preprojective and surface-group algebras.
"""

from .models import (
    ConstructionError,
    CyclicResult,
    CyclicStatus,
    ExtProfile,
    Provenance,
    RelationError,
    RepKind,
    RepParseError,
    SimplicityCertificate,
)
from .representations import AbstractRepresentation, QuiverMatrixRep, SurfaceMatrixRep, generator_labels
from .service import (
    RepLabInterface,
    check_preprojective,
    check_surface,
    cyclic_span,
    end_dim,
    expected_euler_characteristic,
    expected_tangent_dim,
    ext_profile,
    fox_jacobian,
    has_cyclic_vector,
    hom_dim,
    is_simple,
    is_two_sided_point,
    simplicity_certificate,
    tangent_dim,
    tangent_dim_preprojective,
    tangent_dim_surface,
)
from .builders import (
    build_extended_dynkin_cyclic,
    build_quiver_simple,
    build_semisimple,
    build_surface_simple,
    build_two_sided_point,
    dtilde4_quiver,
    lift_quiver_rep,
    random_quiver_rep,
    solve_commutator_equation,
)
from .io import format_rep, load_rep, parse_rep

__all__ = [
    "ConstructionError",
    "CyclicResult",
    "CyclicStatus",
    "ExtProfile",
    "Provenance",
    "RelationError",
    "RepKind",
    "RepParseError",
    "SimplicityCertificate",
    "AbstractRepresentation",
    "QuiverMatrixRep",
    "SurfaceMatrixRep",
    "generator_labels",
    "RepLabInterface",
    "check_preprojective",
    "check_surface",
    "cyclic_span",
    "end_dim",
    "expected_euler_characteristic",
    "expected_tangent_dim",
    "ext_profile",
    "fox_jacobian",
    "has_cyclic_vector",
    "hom_dim",
    "is_simple",
    "is_two_sided_point",
    "simplicity_certificate",
    "tangent_dim",
    "tangent_dim_preprojective",
    "tangent_dim_surface",
    "build_extended_dynkin_cyclic",
    "build_quiver_simple",
    "build_semisimple",
    "build_surface_simple",
    "build_two_sided_point",
    "dtilde4_quiver",
    "lift_quiver_rep",
    "random_quiver_rep",
    "solve_commutator_equation",
    "format_rep",
    "load_rep",
    "parse_rep",
]
