"""
Matrix Representations Module
"""

from .base import AbstractRepresentation
from .quiver_rep import QuiverMatrixRep
from .surface_rep import SurfaceMatrixRep, generator_labels

__all__ = [
    "AbstractRepresentation",
    "QuiverMatrixRep",
    "SurfaceMatrixRep",
    "generator_labels",
]
