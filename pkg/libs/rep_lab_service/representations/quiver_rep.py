"""
Representations of preprojective algebras by matrices on a double quiver
"""
import logging
from typing import Dict, List, Mapping, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from libs.quiver_service import DimensionMismatchError, DimVectorLike, PreconditionError, Quiver

from .. import linalg
from ..models import Provenance, RepKind
from .base import AbstractRepresentation

logger = logging.getLogger(__name__)


class QuiverMatrixRep(AbstractRepresentation):
    """
    One α_{h(a)} x α_{t(a)} block per arrow of a double quiver.

    Blocks are kept as nested rows of QQ elements; `matrix(label)` embeds a block into the
    global n x n matrix (vertex v occupies rows/columns offset_v .. offset_v + α_v).
    """

    def __init__(
        self,
        quiver: Quiver,
        alpha: DimVectorLike,
        blocks: Mapping[str, Sequence[Sequence]],
        provenance: Optional[Provenance] = None,
    ):
        vector = quiver.vector(alpha)
        super().__init__(vector.total, provenance)
        self.quiver = quiver
        self.alpha = vector
        self.source_path: Optional[str] = None
        self.offsets: Dict[str, int] = {}
        position = 0
        for vertex, value in zip(quiver.vertices, vector):
            self.offsets[vertex] = position
            position += value

        unknown = set(blocks) - {a.label for a in quiver.arrows}
        if unknown:
            raise DimensionMismatchError(f"Matrices given for unknown arrows: {sorted(unknown)}")
        self.blocks: Dict[str, List[List]] = {}
        for arrow in quiver.arrows:
            rows, cols = self.dim_at(arrow.head), self.dim_at(arrow.tail)
            block = blocks.get(arrow.label)
            if block is None:
                block = [[QQ.zero] * cols for _ in range(rows)]
            block = [[linalg.qq(x) for x in row] for row in block]
            if len(block) != rows or any(len(row) != cols for row in block):
                raise DimensionMismatchError(
                    f"Matrix of arrow {arrow.label} must be {rows}x{cols} for dimension vector {tuple(vector)}"
                )
            self.blocks[arrow.label] = block
        self._globals = {
            arrow.label: linalg.embed_block(
                self.blocks[arrow.label], self.size, self.offsets[arrow.head], self.offsets[arrow.tail]
            )
            for arrow in quiver.arrows
        }

    def dim_at(self, vertex: str) -> int:
        return self.alpha[self.quiver.index_of(vertex)]

    def vertex_range(self, vertex: str) -> range:
        start = self.offsets[vertex]
        return range(start, start + self.dim_at(vertex))

    @property
    def kind(self) -> RepKind:
        return RepKind.PREPROJECTIVE

    @property
    def signature(self) -> Quiver:
        return self.quiver

    @property
    def square_sum(self) -> int:
        return sum(x * x for x in self.alpha)

    def matrix(self, label: str) -> DomainMatrix:
        return self._globals[label]

    def generators(self) -> Dict[str, DomainMatrix]:
        return dict(self._globals)

    def idempotents(self) -> List[DomainMatrix]:
        projections = []
        for vertex in self.quiver.vertices:
            size = self.dim_at(vertex)
            identity = [[QQ.one if i == j else QQ.zero for j in range(size)] for i in range(size)]
            projections.append(linalg.embed_block(identity, self.size, self.offsets[vertex], self.offsets[vertex]))
        return projections

    def star_pairs(self) -> Sequence:
        """(a, a*) pairs; every arrow must belong to one"""
        paired = {label for pair in self.quiver.star_pairs for label in pair}
        unpaired = [a.label for a in self.quiver.arrows if a.label not in paired]
        if unpaired:
            raise PreconditionError(f"Arrows without a star partner: {unpaired}")
        return self.quiver.star_pairs

    def moment(self) -> DomainMatrix:
        """Σ_a (ρ(a)ρ(a*) - ρ(a*)ρ(a)) as a global matrix"""
        total = linalg.zeros(self.size)
        for a, a_star in self.star_pairs():
            x, y = self._globals[a], self._globals[a_star]
            total = total + x * y - y * x
        return total

    def relation_holds(self) -> bool:
        if self.size == 0:
            return True
        return linalg.is_zero(self.moment())

    def direct_sum(self, other: "AbstractRepresentation") -> "QuiverMatrixRep":
        if not isinstance(other, QuiverMatrixRep) or other.quiver != self.quiver:
            raise PreconditionError("Direct sums need representations of the same double quiver")
        blocks = {}
        for arrow in self.quiver.arrows:
            blocks[arrow.label] = linalg.block_diagonal(
                self.blocks[arrow.label], other.blocks[arrow.label],
                self.dim_at(arrow.tail), other.dim_at(arrow.tail),
            )
        return QuiverMatrixRep(self.quiver, self.alpha.plus(other.alpha), blocks)

    def __repr__(self) -> str:
        return f"QuiverMatrixRep(alpha={tuple(self.alpha)}, arrows={len(self.blocks)})"
