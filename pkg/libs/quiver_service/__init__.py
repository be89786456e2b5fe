"""
Quiver Service Module

Quivers, dimension vectors, the forms p and (,), doubling, components and the
Dynkin / extended Dynkin / wild classification.
"""

from .models import (
    Arrow,
    ClassTag,
    ConsistencyError,
    DimensionMismatchError,
    DimVector,
    DimVectorLike,
    PreconditionError,
    Quiver,
    QuiverClass,
    QuiverParseError,
)
from .forms import arrow_sum, p_form, square_sum, sym_form
from .graph import (
    component_vertex_sets,
    connected_components,
    double_quiver,
    half_quiver,
    is_connected,
    reverse_arrow,
    subquiver,
    support_is_connected,
    support_restrict,
)
from .classification import cartan_matrix, classify, classify_connected, dynkin_type
from .parser import format_dim_vector, format_quiver, load_quiver, parse_dim_vector, parse_quiver

__all__ = [
    "Arrow",
    "ClassTag",
    "ConsistencyError",
    "DimensionMismatchError",
    "DimVector",
    "DimVectorLike",
    "PreconditionError",
    "Quiver",
    "QuiverClass",
    "QuiverParseError",
    "arrow_sum",
    "p_form",
    "square_sum",
    "sym_form",
    "component_vertex_sets",
    "connected_components",
    "double_quiver",
    "half_quiver",
    "is_connected",
    "reverse_arrow",
    "subquiver",
    "support_is_connected",
    "support_restrict",
    "cartan_matrix",
    "classify",
    "classify_connected",
    "dynkin_type",
    "format_dim_vector",
    "format_quiver",
    "load_quiver",
    "parse_dim_vector",
    "parse_quiver",
]
