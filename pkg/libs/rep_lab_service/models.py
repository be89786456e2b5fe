"""
Data models for the representation lab
"""
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class RepParseError(ValueError):
    """Raised when matrix representation text cannot be parsed"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


class RelationError(ValueError):
    """Raised when a representation violates the defining relation of its algebra"""


class ConstructionError(RuntimeError):
    """Raised when a seeded randomized construction exhausts its retry budget"""


class RepKind(str, Enum):
    PREPROJECTIVE = "preprojective"
    SURFACE = "surface"


class ExtProfile(BaseModel):
    """dim Ext^i(M, M) for i = 0, 1, 2 and the tangent dimension at M"""
    model_config = ConfigDict(frozen=True)

    h0: int = Field(ge=0)
    h1: int = Field(ge=0)
    h2: int = Field(ge=0)
    tangent_dim: int = Field(ge=0)

    @model_validator(mode="after")
    def _duality(self) -> "ExtProfile":
        if self.h2 != self.h0:
            raise ValueError(f"Duality requires h2 = h0, got h0={self.h0}, h2={self.h2}")
        return self

    @property
    def euler_characteristic(self) -> int:
        return self.h0 - self.h1 + self.h2


class CyclicStatus(str, Enum):
    YES = "Yes"
    NO = "No"
    NOT_FOUND = "NotFound"


class CyclicResult(BaseModel):
    """
    Outcome of the cyclic vector search.

    Yes carries the vector (entries as 'p/q' strings) and the number of closure rounds;
    No carries the multiplicity bound it violates; NotFound the number of random trials.
    """
    model_config = ConfigDict(frozen=True)

    status: CyclicStatus
    vector: Optional[Tuple[str, ...]] = None
    rounds: Optional[int] = None
    trials: int = 0
    seed: Optional[int] = None
    reason: str = ""


class SimplicityCertificate(BaseModel):
    """Dimension reached by the span of the image of the algebra"""
    model_config = ConfigDict(frozen=True)

    simple: bool
    span_dim: int
    target_dim: int
    rounds: int


class Provenance(BaseModel):
    """How a representation was constructed"""
    model_config = ConfigDict(frozen=True)

    builder: str
    seed: Optional[int] = None
    attempts: int = 1
