"""
Local Model Service Module
"""

from .models import LocalModel, SemisimpleType, SimpleFactor
from .service import (
    component_smooth,
    ext1_between_simples,
    find_singular_witness,
    is_cyclic_type,
    lift_local_type,
    local_quiver,
    semisimple_point_smooth,
    validate_type,
    witness_via_local_model,
    zero_point_smooth,
)

__all__ = [
    "LocalModel",
    "SemisimpleType",
    "SimpleFactor",
    "component_smooth",
    "ext1_between_simples",
    "find_singular_witness",
    "is_cyclic_type",
    "lift_local_type",
    "local_quiver",
    "semisimple_point_smooth",
    "validate_type",
    "witness_via_local_model",
    "zero_point_smooth",
]
