"""
Moduli Service Interface

Closed-form dimensions of representation spaces, quotients and Nori-Hilbert schemes for
preprojective algebras and surface-group algebras, and the smoothness verdicts.
"""
import logging
from itertools import combinations, product
from typing import List, Optional

from libs.lab_config import DEFAULT_LAB_CONFIG, LabConfig
from libs.quiver_service import (
    ClassTag,
    DimVector,
    DimVectorLike,
    PreconditionError,
    Quiver,
    arrow_sum,
    classify,
    classify_connected,
    is_connected,
    p_form,
    square_sum,
    subquiver,
    support_restrict,
)

from .criterion import admits_simples
from .models import (
    AlgebraKind,
    ExtendedDynkinWitness,
    ModuliReport,
    ReasonTag,
    SmoothnessVerdict,
    Verdict,
)

logger = logging.getLogger(__name__)


def _simple_vector(quiver: Quiver, alpha: DimVectorLike) -> Optional[DimVector]:
    vector = quiver.vector(alpha)
    if vector.is_zero:
        raise PreconditionError("Dimension formulas need a nonzero dimension vector")
    return vector if admits_simples(quiver, vector) else None


def rep_dim_preprojective(quiver: Quiver, alpha: DimVectorLike) -> Optional[int]:
    """dim Rep^α Π(Q) = 2p(α) + α·α - 1; None (out of scope) without simples"""
    vector = _simple_vector(quiver, alpha)
    if vector is None:
        return None
    return 2 * p_form(quiver, vector) + square_sum(vector) - 1


def quotient_dim_preprojective(quiver: Quiver, alpha: DimVectorLike) -> Optional[int]:
    """dim Rep^α Π(Q) // GL_α = 2p(α); None without simples"""
    vector = _simple_vector(quiver, alpha)
    if vector is None:
        return None
    return 2 * p_form(quiver, vector)


def hilb_dim_preprojective(quiver: Quiver, alpha: DimVectorLike) -> Optional[int]:
    """1 + 2 Σ_a α_{h(a)} α_{t(a)} + Σ_v (α_v - 2α_v²); None without simples"""
    vector = _simple_vector(quiver, alpha)
    if vector is None:
        return None
    return 1 + 2 * arrow_sum(quiver, vector) + sum(x - 2 * x * x for x in vector)


def hilb_smooth_preprojective(quiver: Quiver, alpha: DimVectorLike) -> SmoothnessVerdict:
    """Smooth iff the support is a single vertex with α = (1); OutOfScope without simples"""
    vector = quiver.vector(alpha)
    if vector.is_zero or not admits_simples(quiver, vector):
        return SmoothnessVerdict(verdict=Verdict.OUT_OF_SCOPE, reason=ReasonTag.NO_SIMPLES,
                                 detail="no simple representations in this dimension vector")
    restricted, sincere = support_restrict(quiver, vector)
    if restricted.vertex_count == 1 and tuple(sincere) == (1,):
        return SmoothnessVerdict(verdict=Verdict.SMOOTH, reason=ReasonTag.PREPROJECTIVE_CRITERION,
                                 detail="one vertex and alpha = (1)")
    return SmoothnessVerdict(verdict=Verdict.SINGULAR, reason=ReasonTag.PREPROJECTIVE_CRITERION,
                             detail="a cyclic module with End != k exists")


def _check_surface_args(genus: int, n: int) -> None:
    if genus < 1:
        raise PreconditionError(f"Surface genus must be >= 1, got {genus}")
    if n < 1:
        raise PreconditionError(f"Representation dimension must be >= 1, got {n}")


def surface_rep_dim(genus: int, n: int) -> int:
    """dim Rep^n A_g: (2g-1)n² + 1 for g > 1, n² + n for g = 1"""
    _check_surface_args(genus, n)
    if genus == 1:
        return n * n + n
    return (2 * genus - 1) * n * n + 1


def surface_hilb_dim(genus: int, n: int) -> Optional[int]:
    """(2g-2)n² + n + 1 for g > 1; None (out of scope) for g = 1"""
    _check_surface_args(genus, n)
    if genus <= 1:
        return None
    return (2 * genus - 2) * n * n + n + 1


def surface_hilb_smooth(genus: int, n: int) -> SmoothnessVerdict:
    """Smooth iff n = 1 for g > 1; OutOfScope for g = 1"""
    _check_surface_args(genus, n)
    if genus <= 1:
        return SmoothnessVerdict(verdict=Verdict.OUT_OF_SCOPE, reason=ReasonTag.GENUS_OUT_OF_RANGE,
                                 detail="smoothness is only decided for genus > 1")
    if n == 1:
        return SmoothnessVerdict(verdict=Verdict.SMOOTH, reason=ReasonTag.SURFACE_CRITERION, detail="n = 1")
    return SmoothnessVerdict(verdict=Verdict.SINGULAR, reason=ReasonTag.SURFACE_CRITERION,
                             detail="two-sided ideal points have a larger tangent space than simples")


def report_preprojective(quiver: Quiver, alpha: DimVectorLike) -> ModuliReport:
    """All dimensions and the Hilb verdict for (Q, α)"""
    vector = quiver.vector(alpha)
    simples = not vector.is_zero and admits_simples(quiver, vector)
    return ModuliReport(
        kind=AlgebraKind.PREPROJECTIVE,
        dim_vector=tuple(vector),
        n=vector.total,
        admits_simples=simples,
        p_value=p_form(quiver, vector),
        rep_dim=rep_dim_preprojective(quiver, vector) if simples else None,
        quotient_dim=quotient_dim_preprojective(quiver, vector) if simples else None,
        hilb_dim=hilb_dim_preprojective(quiver, vector) if simples else None,
        smooth=hilb_smooth_preprojective(quiver, vector),
    )


def report_surface(genus: int, n: int) -> ModuliReport:
    """All dimensions and the Hilb verdict for A_g in dimension n"""
    _check_surface_args(genus, n)
    return ModuliReport(
        kind=AlgebraKind.SURFACE,
        genus=genus,
        n=n,
        admits_simples=genus > 1 or n == 1,
        rep_dim=surface_rep_dim(genus, n),
        hilb_dim=surface_hilb_dim(genus, n),
        smooth=surface_hilb_smooth(genus, n),
    )


def bundle_identity_holds(report: ModuliReport) -> bool:
    """hilb_dim = rep_dim + |α| - α·α whenever both are defined"""
    if report.rep_dim is None or report.hilb_dim is None:
        return True
    squares = square_sum(report.dim_vector) if report.dim_vector is not None else report.n * report.n
    return report.hilb_dim == report.rep_dim + report.n - squares


def hilb_decomposition(quiver: Quiver, n: int) -> List[ModuliReport]:
    """
    Hilb^n of Π(Q) is the disjoint union of the Hilb^α with |α| = n; one report per α.

    Dimension vectors are listed in lexicographic order.
    """
    if n < 1:
        raise PreconditionError(f"Total dimension must be >= 1, got {n}")
    reports = []
    for candidate in product(range(n + 1), repeat=quiver.vertex_count):
        if sum(candidate) == n:
            reports.append(report_preprojective(quiver, candidate))
    return reports


def remark_quotient_bound(quiver: Quiver, alpha: DimVectorLike) -> bool:
    """
    With simples, |α| ≥ 2 and (support, α) not (extended Dynkin, δ), the quotient has dimension ≥ 4.

    Returns whether the implication holds for this input.
    """
    vector = quiver.vector(alpha)
    if vector.is_zero or vector.total < 2 or not admits_simples(quiver, vector):
        return True
    restricted, sincere = support_restrict(quiver, vector)
    classes = classify(restricted)
    if len(classes) == 1 and classes[0].tag == ClassTag.EXTENDED_DYNKIN and classes[0].delta == tuple(sincere):
        return True
    return quotient_dim_preprojective(quiver, vector) >= 4


def _loop_witnesses(quiver: Quiver, vector: DimVector) -> List[ExtendedDynkinWitness]:
    witnesses = []
    for vertex, value in zip(quiver.vertices, vector):
        loops = [a for a in quiver.arrows if a.is_loop and a.tail == vertex]
        if loops and value >= 1:
            jordan = Quiver(vertices=(vertex,), arrows=(loops[0],))
            witnesses.append(ExtendedDynkinWitness(subquiver=jordan, delta=(1,), type_name="~A_0"))
    return witnesses


def extended_dynkin_lower_bound(
    quiver: Quiver, alpha: DimVectorLike, config: LabConfig = DEFAULT_LAB_CONFIG
) -> Optional[ExtendedDynkinWitness]:
    """
    Find an extended Dynkin subquiver with imaginary root δ ≤ α

    Subquivers are searched by vertex count, then vertex subsets in vertex order, then arrow
    subsets; the one-vertex-one-loop quiver counts as ~A_0.

    Args:
        quiver: Quiver Q
        alpha: Dimension vector
        config: Search bounds (max_subquiver_arrows)

    Returns:
        The first witness found, or None when α has no simples or is a loop-free ε_v
    """
    vector = quiver.vector(alpha)
    if vector.is_zero or not admits_simples(quiver, vector):
        return None
    coordinate = vector.coordinate_index()
    if coordinate is not None and vector[coordinate] == 1 and not quiver.has_loop(quiver.vertices[coordinate]):
        return None

    loops = _loop_witnesses(quiver, vector)
    if loops:
        return loops[0]

    positive = [v for v, x in zip(quiver.vertices, vector) if x >= 1]
    for size in range(2, len(positive) + 1):
        for members in combinations(positive, size):
            keep = set(members)
            induced = [a for a in quiver.arrows if a.tail in keep and a.head in keep and not a.is_loop]
            if len(induced) > config.max_subquiver_arrows:
                logger.warning(f"Skipping subquiver on {members}: {len(induced)} arrows exceed the search bound")
                continue
            # extended Dynkin graphs on k vertices have k - 1 (trees) or k (cycles) edges
            for edge_count in (size - 1, size):
                for chosen in combinations(induced, edge_count):
                    candidate = subquiver(quiver, members, [a.label for a in chosen])
                    if not is_connected(candidate):
                        continue
                    quiver_class = classify_connected(candidate)
                    if quiver_class.tag != ClassTag.EXTENDED_DYNKIN:
                        continue
                    bound = tuple(vector[quiver.index_of(v)] for v in candidate.vertices)
                    if all(d <= b for d, b in zip(quiver_class.delta, bound)):
                        logger.debug(f"Extended Dynkin witness {quiver_class.type_name} on {members}")
                        return ExtendedDynkinWitness(
                            subquiver=candidate, delta=quiver_class.delta, type_name=quiver_class.type_name
                        )
    return None
