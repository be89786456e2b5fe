"""
Data models for the quiver service
"""
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class QuiverParseError(ValueError):
    """Raised when quiver text cannot be parsed"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


class DimensionMismatchError(ValueError):
    """Raised when a dimension vector does not fit the quiver it is used with"""


class PreconditionError(ValueError):
    """Raised when an operation is called outside of its documented preconditions"""


class ConsistencyError(RuntimeError):
    """Raised when an internal identity that must hold is violated"""


class DimVector(tuple):
    """
    Nonnegative integer vector indexed by the vertices of a quiver, in vertex order.

    A tuple subclass so that vectors hash, compare lexicographically and unpack like tuples.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        values = tuple(int(x) for x in entries)
        if any(x < 0 for x in values):
            raise DimensionMismatchError(f"Dimension vector entries must be nonnegative: {values}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"DimVector({tuple(self)})"

    @property
    def total(self) -> int:
        """|α|, the sum of all entries"""
        return sum(self)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self)

    @property
    def is_sincere(self) -> bool:
        return all(x > 0 for x in self)

    @property
    def support(self) -> Tuple[int, ...]:
        """Indices of the nonzero entries"""
        return tuple(i for i, x in enumerate(self) if x)

    def dot(self, other: Sequence[int]) -> int:
        """Standard dot product; dot(α, α) is the α·α of the dimension formulas"""
        return sum(x * y for x, y in zip(self, other))

    def plus(self, other: Sequence[int]) -> "DimVector":
        return DimVector(x + y for x, y in zip(self, other))

    def minus(self, other: Sequence[int]) -> "DimVector":
        return DimVector(x - y for x, y in zip(self, other))

    def leq(self, other: Sequence[int]) -> bool:
        """Componentwise order α ≤ β"""
        return all(x <= y for x, y in zip(self, other))

    def coordinate_index(self) -> Optional[int]:
        """Index v if the vector is a positive multiple of ε_v, else None"""
        support = self.support
        return support[0] if len(support) == 1 else None


DimVectorLike = Union[DimVector, Sequence[int]]


class Arrow(BaseModel):
    """A labeled arrow tail -> head"""
    model_config = ConfigDict(frozen=True)

    label: str
    tail: str
    head: str

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


class Quiver(BaseModel):
    """
    Finite directed multigraph with labeled vertices and arrows.

    Vertex order is fixed at construction and used for all vector indexing.
    Double quivers carry `star_pairs`, the (a, a*) label pairs produced by doubling.
    """
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...] = ()
    arrows: Tuple[Arrow, ...] = ()
    star_pairs: Tuple[Tuple[str, str], ...] = ()

    @model_validator(mode="after")
    def _check_labels(self) -> "Quiver":
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Duplicate vertex labels in {self.vertices}")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Duplicate arrow labels in {labels}")
        declared = set(self.vertices)
        for arrow in self.arrows:
            if arrow.tail not in declared or arrow.head not in declared:
                raise ValueError(f"Arrow {arrow.label} uses undeclared vertex ({arrow.tail} -> {arrow.head})")
        by_label = {a.label: a for a in self.arrows}
        for a, a_star in self.star_pairs:
            if a not in by_label or a_star not in by_label:
                raise ValueError(f"Star pair ({a}, {a_star}) refers to unknown arrows")
            if (by_label[a].tail, by_label[a].head) != (by_label[a_star].head, by_label[a_star].tail):
                raise ValueError(f"Star pair ({a}, {a_star}) does not reverse endpoints")
        return self

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    @property
    def is_double(self) -> bool:
        return bool(self.star_pairs) or not self.arrows

    def index_of(self, vertex: str) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise DimensionMismatchError(f"Unknown vertex: {vertex}")

    def arrow(self, label: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.label == label:
                return arrow
        raise KeyError(f"Unknown arrow: {label}")

    def loop_count(self, vertex: str) -> int:
        return sum(1 for a in self.arrows if a.is_loop and a.tail == vertex)

    def has_loop(self, vertex: str) -> bool:
        return self.loop_count(vertex) > 0

    def arrow_count_between(self, tail: str, head: str) -> int:
        return sum(1 for a in self.arrows if a.tail == tail and a.head == head)

    def arrow_index_pairs(self) -> List[Tuple[int, int]]:
        """(tail index, head index) for every arrow, in arrow order"""
        index = {v: i for i, v in enumerate(self.vertices)}
        return [(index[a.tail], index[a.head]) for a in self.arrows]

    def coordinate_vector(self, vertex: str) -> DimVector:
        """ε_v"""
        position = self.index_of(vertex)
        return DimVector(1 if i == position else 0 for i in range(self.vertex_count))

    def zero_vector(self) -> DimVector:
        return DimVector(0 for _ in self.vertices)

    def vector(self, values: DimVectorLike) -> DimVector:
        """Validate `values` against this quiver and return it as a DimVector"""
        vector = values if isinstance(values, DimVector) else DimVector(values)
        if len(vector) != self.vertex_count:
            raise DimensionMismatchError(
                f"Dimension vector {tuple(vector)} has {len(vector)} entries, quiver has {self.vertex_count} vertices"
            )
        return vector

    def vector_from_mapping(self, values: Dict[str, int]) -> DimVector:
        unknown = set(values) - set(self.vertices)
        if unknown:
            raise DimensionMismatchError(f"Unknown vertices in dimension vector: {sorted(unknown)}")
        return DimVector(values.get(v, 0) for v in self.vertices)


class ClassTag(str, Enum):
    """Classification of a connected quiver"""
    DYNKIN = "Dynkin"
    EXTENDED_DYNKIN = "ExtendedDynkin"
    WILD = "Wild"


class QuiverClass(BaseModel):
    """Classification of one connected component"""
    model_config = ConfigDict(frozen=True)

    tag: ClassTag
    vertices: Tuple[str, ...]
    type_name: Optional[str] = None
    delta: Optional[Tuple[int, ...]] = Field(
        default=None, description="Imaginary root δ over `vertices`, present exactly for extended Dynkin components"
    )

    @model_validator(mode="after")
    def _delta_iff_extended(self) -> "QuiverClass":
        if (self.tag == ClassTag.EXTENDED_DYNKIN) != (self.delta is not None):
            raise ValueError("δ is carried exactly by extended Dynkin components")
        return self
