"""
Data models for the local model service
"""
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from libs.quiver_service import DimVector, Quiver


class SimpleFactor(BaseModel):
    """
    e simple summands of dimension vector β.

    With `distinct` the e summands are pairwise non-isomorphic simples of type β;
    otherwise they are e copies of one simple.
    """
    model_config = ConfigDict(frozen=True)

    dim: Tuple[int, ...]
    multiplicity: int = Field(default=1, ge=1)
    distinct: bool = False

    @property
    def total(self) -> int:
        return sum(self.dim)

    @property
    def copies_per_class(self) -> int:
        """Multiplicity of each isomorphism class among the summands"""
        return 1 if self.distinct else self.multiplicity


class SemisimpleType(BaseModel):
    """S_1^{e_1} ⊕ ... ⊕ S_k^{e_k} recorded by dimension vectors and multiplicities"""
    model_config = ConfigDict(frozen=True)

    factors: Tuple[SimpleFactor, ...]

    @model_validator(mode="after")
    def _check_factors(self) -> "SemisimpleType":
        if not self.factors:
            raise ValueError("A semisimple type needs at least one factor")
        lengths = {len(f.dim) for f in self.factors}
        if len(lengths) != 1:
            raise ValueError(f"Factor dimension vectors have different lengths: {sorted(lengths)}")
        dims = [f.dim for f in self.factors]
        if len(set(dims)) != len(dims):
            raise ValueError(f"Factor dimension vectors must be pairwise distinct: {dims}")
        if any(not any(d) or min(d) < 0 for d in dims):
            raise ValueError(f"Factor dimension vectors must be nonzero and nonnegative: {dims}")
        return self

    @property
    def alpha(self) -> DimVector:
        """α = Σ e_i β_i"""
        size = len(self.factors[0].dim)
        return DimVector(sum(f.multiplicity * f.dim[i] for f in self.factors) for i in range(size))

    @property
    def summand_count(self) -> int:
        """Number of simple summands counted with multiplicity"""
        return sum(f.multiplicity for f in self.factors)

    @property
    def is_simple(self) -> bool:
        return self.summand_count == 1


class LocalModel(BaseModel):
    """
    Local quiver at a semisimple point.

    One local vertex per isomorphism class of simple summand (a distinct factor contributes
    e vertices); `vertex_factors[i]` is the base dimension vector of local vertex i and `eps`
    the multiplicities. `local_quiver` is the double of `half_quiver`.
    """
    model_config = ConfigDict(frozen=True)

    local_quiver: Quiver
    half_quiver: Quiver
    eps: Tuple[int, ...]
    vertex_factors: Tuple[Tuple[int, ...], ...]
