"""
Representations of surface-group algebras
"""
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from libs.quiver_service import DimensionMismatchError, PreconditionError

from .. import linalg
from ..models import Provenance, RepKind
from .base import AbstractRepresentation


def generator_labels(genus: int) -> List[str]:
    """X1, Y1, ..., Xg, Yg"""
    return [f"{letter}{i}" for i in range(1, genus + 1) for letter in ("X", "Y")]


class SurfaceMatrixRep(AbstractRepresentation):
    """
    Invertible n x n matrices X_1, Y_1, ..., X_g, Y_g.

    Invertibility is checked at construction; inverses are computed on first use.
    """

    def __init__(self, genus: int, matrices: Sequence[DomainMatrix], provenance: Optional[Provenance] = None):
        if genus < 1:
            raise PreconditionError(f"Surface genus must be >= 1, got {genus}")
        if len(matrices) != 2 * genus:
            raise DimensionMismatchError(f"Genus {genus} needs {2 * genus} matrices, got {len(matrices)}")
        n = matrices[0].shape[0]
        if n < 1:
            raise DimensionMismatchError("Surface representations need n >= 1")
        for label, mat in zip(generator_labels(genus), matrices):
            if mat.shape != (n, n):
                raise DimensionMismatchError(f"Matrix {label} has shape {mat.shape}, expected {(n, n)}")
            if not linalg.is_invertible(mat):
                raise PreconditionError(f"Generator {label} is singular")
        super().__init__(n, provenance)
        self.genus = genus
        self.matrices: Tuple[DomainMatrix, ...] = tuple(matrices)

    @cached_property
    def inverses(self) -> Tuple[DomainMatrix, ...]:
        return tuple(linalg.inverse(mat) for mat in self.matrices)

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        """Indices (of X_i, of Y_i) into `matrices`"""
        return [(2 * i, 2 * i + 1) for i in range(self.genus)]

    @property
    def kind(self) -> RepKind:
        return RepKind.SURFACE

    @property
    def signature(self) -> Tuple[str, int]:
        return ("surface", self.genus)

    @property
    def square_sum(self) -> int:
        return self.size * self.size

    def generators(self) -> Dict[str, DomainMatrix]:
        return dict(zip(generator_labels(self.genus), self.matrices))

    def idempotents(self) -> List[DomainMatrix]:
        return [linalg.identity(self.size)]

    def relator_value(self) -> DomainMatrix:
        """Π_i X_i Y_i X_i^{-1} Y_i^{-1}"""
        product = linalg.identity(self.size)
        for x, y in self.pairs:
            product = product * linalg.commutator(
                self.matrices[x], self.matrices[y], self.inverses[x], self.inverses[y]
            )
        return product

    def relation_holds(self) -> bool:
        return self.relator_value() == linalg.identity(self.size)

    def direct_sum(self, other: "AbstractRepresentation") -> "SurfaceMatrixRep":
        if not isinstance(other, SurfaceMatrixRep) or other.genus != self.genus:
            raise PreconditionError("Direct sums need representations of the same surface group")
        matrices = [
            linalg.matrix(linalg.block_diagonal(
                linalg.entries(a), linalg.entries(b), self.size, other.size
            ))
            for a, b in zip(self.matrices, other.matrices)
        ]
        return SurfaceMatrixRep(self.genus, matrices)

    def __repr__(self) -> str:
        return f"SurfaceMatrixRep(genus={self.genus}, n={self.size})"
