"""
Data models for the moduli service
"""
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from libs.quiver_service import Quiver


class Verdict(str, Enum):
    """Smoothness decision; OutOfScope whenever the dimension formulas do not apply"""
    SMOOTH = "Smooth"
    SINGULAR = "Singular"
    OUT_OF_SCOPE = "OutOfScope"


class ReasonTag(str, Enum):
    """Why a verdict was reached"""
    PREPROJECTIVE_CRITERION = "preprojective-hilb-criterion"
    SURFACE_CRITERION = "surface-hilb-criterion"
    NO_SIMPLES = "no-simples"
    GENUS_OUT_OF_RANGE = "genus-out-of-range"
    COMPONENT_CRITERION = "component-smooth-criterion"


class SmoothnessVerdict(BaseModel):
    """A verdict with its reason"""
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    reason: ReasonTag
    detail: str = ""


class AlgebraKind(str, Enum):
    PREPROJECTIVE = "preprojective"
    SURFACE = "surface"


class ModuliReport(BaseModel):
    """Dimensions and the smoothness verdict for one (Q, α) or (g, n)"""
    model_config = ConfigDict(frozen=True)

    kind: AlgebraKind
    dim_vector: Optional[Tuple[int, ...]] = None
    genus: Optional[int] = None
    n: int
    admits_simples: bool
    p_value: Optional[int] = None
    rep_dim: Optional[int] = None
    quotient_dim: Optional[int] = None
    hilb_dim: Optional[int] = None
    smooth: SmoothnessVerdict

    @model_validator(mode="after")
    def _bundle_identity(self) -> "ModuliReport":
        if self.rep_dim is not None and self.hilb_dim is not None:
            squares = sum(x * x for x in self.dim_vector) if self.dim_vector is not None else self.n * self.n
            if self.hilb_dim != self.rep_dim + self.n - squares:
                raise ValueError(
                    f"hilb_dim {self.hilb_dim} breaks the bundle identity with rep_dim {self.rep_dim}"
                )
        return self


class DecompositionCertificate(BaseModel):
    """A decomposition α = β¹ + ... + β^r into positive roots violating p(α) > Σ p(βⁱ)"""
    model_config = ConfigDict(frozen=True)

    parts: Tuple[Tuple[int, ...], ...]
    p_total: int = Field(description="Σ p(βⁱ)")
    p_alpha: int


class ExtendedDynkinWitness(BaseModel):
    """An extended Dynkin subquiver (or the one-loop quiver) with imaginary root δ ≤ α"""
    model_config = ConfigDict(frozen=True)

    subquiver: Quiver
    delta: Tuple[int, ...] = Field(description="δ over the subquiver's vertices")
    type_name: str

    def delta_in(self, quiver: Quiver) -> Tuple[int, ...]:
        """δ extended by zero to the vertices of the ambient quiver"""
        values = dict(zip(self.subquiver.vertices, self.delta))
        return tuple(values.get(v, 0) for v in quiver.vertices)
