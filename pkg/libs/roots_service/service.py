"""
Root System Service

Decides whether a dimension vector is a positive root by Kac's reduction to the
fundamental region, and enumerates the positive roots below a bound.
"""
import logging
import threading
from functools import lru_cache
from itertools import product
from typing import Dict, List, Sequence, Tuple

from libs.quiver_service import (
    DimensionMismatchError,
    DimVector,
    DimVectorLike,
    PreconditionError,
    Quiver,
    support_is_connected,
    sym_form,
)

from .models import RootClass, RootTag

logger = logging.getLogger(__name__)


def _pairing_with_coordinate(quiver: Quiver, alpha: Sequence[int], index: int) -> int:
    """(α, ε_v) without materializing ε_v"""
    vertex = quiver.vertices[index]
    value = 2 * alpha[index]
    for arrow in quiver.arrows:
        if arrow.tail == vertex:
            value -= alpha[quiver.index_of(arrow.head)]
        if arrow.head == vertex:
            value -= alpha[quiver.index_of(arrow.tail)]
    return value


def reflect(quiver: Quiver, alpha: Sequence[int], vertex: str) -> Tuple[int, ...]:
    """
    Weyl reflection s_v(α) = α - (α, ε_v) ε_v at a loop-free vertex.

    The result is a lattice vector and may have a negative entry; callers interpret the sign.

    Raises:
        PreconditionError: if v carries a loop
    """
    if quiver.has_loop(vertex):
        raise PreconditionError(f"Reflection at looped vertex '{vertex}' is not defined")
    values = tuple(int(x) for x in alpha)
    if len(values) != quiver.vertex_count:
        raise DimensionMismatchError(f"Vector {values} does not match {quiver.vertex_count} vertices")
    index = quiver.index_of(vertex)
    shift = _pairing_with_coordinate(quiver, values, index)
    return tuple(x - shift if i == index else x for i, x in enumerate(values))


class RootSystem:
    """
    Root system of a fixed quiver with a memo table of classifications.

    The memo is guarded by a lock so concurrent queries see a consistent cache.
    """

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self._loop_free = [i for i, v in enumerate(quiver.vertices) if not quiver.has_loop(v)]
        self._memo: Dict[Tuple[int, ...], RootClass] = {}
        self._lock = threading.Lock()

    def _reduce(self, alpha: Tuple[int, ...]) -> RootClass:
        quiver = self.quiver
        trace: List[str] = []
        current = alpha
        while True:
            if any(x < 0 for x in current):
                return RootClass(tag=RootTag.NOT_ROOT, trace=tuple(trace), terminal=current)
            coordinate = DimVector(current).coordinate_index()
            if coordinate is not None and current[coordinate] == 1:
                vertex = quiver.vertices[coordinate]
                tag = RootTag.IMAGINARY_ROOT if quiver.has_loop(vertex) else RootTag.REAL_ROOT
                return RootClass(tag=tag, trace=tuple(trace), terminal=current)
            if not support_is_connected(quiver, current):
                return RootClass(tag=RootTag.NOT_ROOT, trace=tuple(trace), terminal=current)
            # smallest-index loop-free vertex with positive pairing
            step = next((i for i in self._loop_free if _pairing_with_coordinate(quiver, current, i) > 0), None)
            if step is None:
                return RootClass(tag=RootTag.IMAGINARY_ROOT, trace=tuple(trace), terminal=current)
            vertex = quiver.vertices[step]
            trace.append(vertex)
            current = reflect(quiver, current, vertex)

    def classify_root(self, alpha: DimVectorLike) -> RootClass:
        """
        Classify α as NotRoot, RealRoot or ImaginaryRoot

        Args:
            alpha: Nonzero dimension vector

        Returns:
            RootClass with the reflection trace
        """
        vector = self.quiver.vector(alpha)
        if vector.is_zero:
            raise PreconditionError("classify_root needs a nonzero dimension vector")
        key = tuple(vector)
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached
        result = self._reduce(key)
        logger.debug(f"classify_root{key} -> {result.tag.value} via {result.trace}")
        with self._lock:
            self._memo[key] = result
        return result

    def is_root(self, alpha: DimVectorLike) -> bool:
        return self.classify_root(alpha).is_root

    def positive_roots_below(self, alpha: DimVectorLike) -> List[DimVector]:
        """All positive roots β with 0 < β ≤ α, in lexicographic order"""
        bound = self.quiver.vector(alpha)
        roots = []
        for candidate in product(*(range(x + 1) for x in bound)):
            if any(candidate) and self.classify_root(candidate).is_root:
                roots.append(DimVector(candidate))
        return roots


@lru_cache(maxsize=256)
def get_root_system(quiver: Quiver) -> RootSystem:
    """Shared RootSystem per quiver for the current session"""
    return RootSystem(quiver)


def classify_root(quiver: Quiver, alpha: DimVectorLike) -> RootClass:
    """Module-level shortcut using the shared per-quiver root system"""
    return get_root_system(quiver).classify_root(alpha)


def positive_roots_below(quiver: Quiver, alpha: DimVectorLike) -> List[DimVector]:
    """Module-level shortcut using the shared per-quiver root system"""
    return get_root_system(quiver).positive_roots_below(alpha)


def check_root_form(quiver: Quiver, alpha: DimVectorLike, root: RootClass) -> bool:
    """RealRoot implies (α, α) = 2 and ImaginaryRoot implies (α, α) ≤ 0, i.e. p = 0 resp. p ≥ 1"""
    value = sym_form(quiver, alpha, alpha)
    if root.tag == RootTag.REAL_ROOT:
        return value == 2
    if root.tag == RootTag.IMAGINARY_ROOT:
        return value <= 0
    return True
