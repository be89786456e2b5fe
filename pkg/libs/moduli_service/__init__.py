"""
Moduli Service Module
"""

from .models import (
    AlgebraKind,
    DecompositionCertificate,
    ExtendedDynkinWitness,
    ModuliReport,
    ReasonTag,
    SmoothnessVerdict,
    Verdict,
)
from .criterion import SimplesCriterion, admits_simples, get_criterion, violating_decomposition
from .service import (
    bundle_identity_holds,
    extended_dynkin_lower_bound,
    hilb_decomposition,
    hilb_dim_preprojective,
    hilb_smooth_preprojective,
    quotient_dim_preprojective,
    remark_quotient_bound,
    rep_dim_preprojective,
    report_preprojective,
    report_surface,
    surface_hilb_dim,
    surface_hilb_smooth,
    surface_rep_dim,
)

__all__ = [
    "AlgebraKind",
    "DecompositionCertificate",
    "ExtendedDynkinWitness",
    "ModuliReport",
    "ReasonTag",
    "SmoothnessVerdict",
    "Verdict",
    "SimplesCriterion",
    "admits_simples",
    "get_criterion",
    "violating_decomposition",
    "bundle_identity_holds",
    "extended_dynkin_lower_bound",
    "hilb_decomposition",
    "hilb_dim_preprojective",
    "hilb_smooth_preprojective",
    "quotient_dim_preprojective",
    "remark_quotient_bound",
    "rep_dim_preprojective",
    "report_preprojective",
    "report_surface",
    "surface_hilb_dim",
    "surface_hilb_smooth",
    "surface_rep_dim",
]
