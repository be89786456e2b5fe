"""
Data models for the root system service
"""
from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field


class RootTag(str, Enum):
    """Outcome of the root test"""
    NOT_ROOT = "NotRoot"
    REAL_ROOT = "RealRoot"
    IMAGINARY_ROOT = "ImaginaryRoot"


class RootClass(BaseModel):
    """Classification of a dimension vector with the reflection trace that decided it"""
    model_config = ConfigDict(frozen=True)

    tag: RootTag
    trace: Tuple[str, ...] = Field(default=(), description="Vertices reflected at, in order")
    terminal: Tuple[int, ...] = Field(default=(), description="Vector reached when the reduction stopped")

    @property
    def is_root(self) -> bool:
        return self.tag != RootTag.NOT_ROOT
