"""
Crawley-Boevey's criterion for the existence of simple Π(Q)-representations.

α admits simples iff α is a positive root and p(α) > Σ p(βⁱ) for every decomposition
α = β¹ + ... + β^r (r ≥ 2) into positive roots. Only the maximum of Σ p over
decompositions matters, so it is computed once per remainder vector and cached.
"""
import logging
import threading
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from libs.quiver_service import (
    DimVector,
    DimVectorLike,
    PreconditionError,
    Quiver,
    component_vertex_sets,
    p_form,
    support_restrict,
)
from libs.roots_service import get_root_system

from .models import DecompositionCertificate

logger = logging.getLogger(__name__)


class SimplesCriterion:
    """Criterion evaluator bound to one (sincere, connected) quiver"""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.roots = get_root_system(quiver)
        # remainder -> (max Σp over decompositions into ≥1 roots, first root of a maximizer)
        self._best: Dict[Tuple[int, ...], Tuple[int, Tuple[int, ...]]] = {}
        self._lock = threading.Lock()

    def best_sum(self, gamma: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
        """Maximum of Σ p(βⁱ) over decompositions of a nonzero γ into positive roots"""
        with self._lock:
            cached = self._best.get(gamma)
        if cached is not None:
            return cached
        best: Optional[Tuple[int, Tuple[int, ...]]] = None
        for beta in self.roots.positive_roots_below(gamma):
            rest = tuple(g - b for g, b in zip(gamma, beta))
            value = p_form(self.quiver, beta)
            if any(rest):
                value += self.best_sum(rest)[0]
            if best is None or value > best[0]:
                best = (value, tuple(beta))
        if best is None:
            # coordinate vectors are always roots, so every nonzero γ decomposes
            raise PreconditionError(f"No decomposition of {gamma} into positive roots")
        with self._lock:
            self._best[gamma] = best
        return best

    def _unfold(self, gamma: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        parts = []
        while any(gamma):
            _, beta = self.best_sum(gamma)
            parts.append(beta)
            gamma = tuple(g - b for g, b in zip(gamma, beta))
        return parts

    def violating_decomposition(self, alpha: Tuple[int, ...]) -> Optional[DecompositionCertificate]:
        """First decomposition with r ≥ 2 parts and Σp ≥ p(α), or None"""
        p_alpha = p_form(self.quiver, alpha)
        for beta in self.roots.positive_roots_below(alpha):
            if tuple(beta) == alpha:
                continue
            rest = tuple(a - b for a, b in zip(alpha, beta))
            total = p_form(self.quiver, beta) + self.best_sum(rest)[0]
            if total >= p_alpha:
                parts = tuple(sorted([tuple(beta)] + self._unfold(rest), reverse=True))
                logger.debug(f"Decomposition {parts} of {alpha} reaches Σp={total} >= p={p_alpha}")
                return DecompositionCertificate(parts=parts, p_total=total, p_alpha=p_alpha)
        return None

    def admits_simples(self, alpha: Tuple[int, ...]) -> bool:
        if not self.roots.is_root(alpha):
            return False
        return self.violating_decomposition(alpha) is None


@lru_cache(maxsize=256)
def get_criterion(quiver: Quiver) -> SimplesCriterion:
    """Shared criterion evaluator per quiver for the current session"""
    return SimplesCriterion(quiver)


def _restricted(quiver: Quiver, alpha: DimVectorLike) -> Tuple[Quiver, DimVector]:
    vector = quiver.vector(alpha)
    if vector.is_zero:
        raise PreconditionError("The criterion needs a nonzero dimension vector")
    return support_restrict(quiver, vector)


def admits_simples(quiver: Quiver, alpha: DimVectorLike) -> bool:
    """
    Decide whether Rep^α of Π(Q) contains simple representations

    Args:
        quiver: Quiver Q (loops and multiple arrows allowed)
        alpha: Nonzero dimension vector

    Returns:
        True iff simple α-dimensional Π(Q)-modules exist
    """
    restricted, vector = _restricted(quiver, alpha)
    if len(component_vertex_sets(restricted)) > 1:
        # a simple module lives on a single component of the support
        return False
    return get_criterion(restricted).admits_simples(tuple(vector))


def violating_decomposition(quiver: Quiver, alpha: DimVectorLike) -> Optional[DecompositionCertificate]:
    """Certificate for a failed criterion; None when α is not a root or the criterion holds"""
    restricted, vector = _restricted(quiver, alpha)
    if len(component_vertex_sets(restricted)) > 1:
        return None
    criterion = get_criterion(restricted)
    if not criterion.roots.is_root(vector):
        return None
    certificate = criterion.violating_decomposition(tuple(vector))
    if certificate is None:
        return None
    support = quiver.vector(alpha).support
    size = quiver.vertex_count

    def widen(part: Tuple[int, ...]) -> Tuple[int, ...]:
        values = dict(zip(support, part))
        return tuple(values.get(i, 0) for i in range(size))

    return certificate.model_copy(update={"parts": tuple(widen(part) for part in certificate.parts)})
