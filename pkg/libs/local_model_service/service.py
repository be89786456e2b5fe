"""
Local Model Service Interface

Local quivers at semisimple points of Rep^α Π(Q), cyclicity of semisimple types, smoothness
of zero and semisimple points, and the search for cyclic non-simple semisimple witnesses.
"""
import logging
from collections import Counter
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from libs.lab_config import DEFAULT_LAB_CONFIG, LabConfig
from libs.moduli_service import (
    ReasonTag,
    SmoothnessVerdict,
    Verdict,
    admits_simples,
)
from libs.quiver_service import (
    Arrow,
    ConsistencyError,
    DimVector,
    DimVectorLike,
    PreconditionError,
    Quiver,
    component_vertex_sets,
    double_quiver,
    p_form,
    support_restrict,
    sym_form,
)
from libs.roots_service import positive_roots_below

from .models import LocalModel, SemisimpleType, SimpleFactor

logger = logging.getLogger(__name__)


def validate_type(quiver: Quiver, sstype: SemisimpleType) -> None:
    """
    Check a semisimple type against its base quiver

    Raises:
        PreconditionError: a factor does not fit the quiver, admits no simples, or is flagged
            distinct without a positive-dimensional family of simples
    """
    for factor in sstype.factors:
        beta = quiver.vector(factor.dim)
        if not admits_simples(quiver, beta):
            raise PreconditionError(f"Factor {factor.dim} admits no simple representations")
        if factor.distinct and factor.multiplicity > 1 and p_form(quiver, beta) <= 0:
            raise PreconditionError(
                f"Factor {factor.dim} has a single simple up to isomorphism, it cannot be flagged distinct"
            )


def ext1_between_simples(
    quiver: Quiver, beta: DimVectorLike, gamma: DimVectorLike, isomorphic: Optional[bool] = None
) -> int:
    """
    dim Ext¹(S, T) for simples S, T of dimension vectors β, γ: 2·[S ≅ T] - (β, γ)

    Args:
        quiver: Base quiver Q
        beta: Dimension vector of S
        gamma: Dimension vector of T
        isomorphic: Whether S ≅ T; defaults to β = γ. Pass False for two non-isomorphic
            simples sharing a dimension vector.

    Returns:
        Nonnegative integer
    """
    b, c = quiver.vector(beta), quiver.vector(gamma)
    for vector in (b, c):
        if vector.is_zero or not admits_simples(quiver, vector):
            raise PreconditionError(f"{tuple(vector)} admits no simple representations")
    same = (b == c) if isomorphic is None else isomorphic
    if same and b != c:
        raise PreconditionError("Simples with different dimension vectors are never isomorphic")
    value = (2 if same else 0) - sym_form(quiver, b, c)
    if value < 0:
        raise ConsistencyError(f"Negative Ext¹ {value} between simples of types {tuple(b)} and {tuple(c)}")
    return value


def _local_vertices(sstype: SemisimpleType) -> List[Tuple[Tuple[int, ...], int, int]]:
    """(base dimension vector, multiplicity, factor index) per local vertex"""
    vertices = []
    for index, factor in enumerate(sstype.factors):
        if factor.distinct:
            vertices.extend((factor.dim, 1, index) for _ in range(factor.multiplicity))
        else:
            vertices.append((factor.dim, factor.multiplicity, index))
    return vertices


def local_quiver(quiver: Quiver, sstype: SemisimpleType) -> LocalModel:
    """
    Build the local quiver of a semisimple type

    Local vertex i carries 2p(β_i) loops and Ext¹(S_i, S_j) arrows to vertex j. The half
    quiver takes p(β_i) loops at i and, for i < j, the Ext¹(S_i, S_j) arrows i -> j; the
    local quiver is its double.

    Args:
        quiver: Base quiver Q
        sstype: Validated semisimple type over Q

    Returns:
        LocalModel with ε the multiplicities
    """
    validate_type(quiver, sstype)
    local = _local_vertices(sstype)
    labels = tuple(f"s{i + 1}" for i in range(len(local)))
    arrows: List[Arrow] = []
    for i, (beta, _, _) in enumerate(local):
        self_ext = ext1_between_simples(quiver, beta, beta)
        if self_ext % 2:
            raise ConsistencyError(f"Odd self-extension count {self_ext} at local vertex {labels[i]}")
        arrows.extend(
            Arrow(label=f"l{i + 1}_{k + 1}", tail=labels[i], head=labels[i]) for k in range(self_ext // 2)
        )
    for i, (beta, _, _) in enumerate(local):
        for j in range(i + 1, len(local)):
            gamma = local[j][0]
            count = ext1_between_simples(quiver, beta, gamma, isomorphic=False)
            arrows.extend(
                Arrow(label=f"b{i + 1}_{j + 1}_{k + 1}", tail=labels[i], head=labels[j]) for k in range(count)
            )
    half = Quiver(vertices=labels, arrows=tuple(arrows))
    model = LocalModel(
        local_quiver=double_quiver(half),
        half_quiver=half,
        eps=tuple(e for _, e, _ in local),
        vertex_factors=tuple(beta for beta, _, _ in local),
    )
    logger.debug(f"Local quiver of {sstype.factors}: {half.arrow_count} half arrows, eps={model.eps}")
    return model


def is_cyclic_type(sstype: SemisimpleType) -> bool:
    """A semisimple module ⊕ S_i^{e_i} is cyclic iff e_i ≤ dim S_i for every isomorphism class"""
    return all(factor.copies_per_class <= factor.total for factor in sstype.factors)


def zero_point_smooth(quiver: Quiver, alpha: DimVectorLike) -> bool:
    """
    Smoothness of Rep^α Π(Q) at the zero representation, α sincere

    Every component must be one vertex with α = 1, or one vertex without loops.
    """
    vector = quiver.vector(alpha)
    if not vector.is_sincere:
        raise PreconditionError(f"zero_point_smooth needs a sincere vector, got {tuple(vector)}")
    for members in component_vertex_sets(quiver):
        if len(members) != 1:
            return False
        vertex = members[0]
        if quiver.has_loop(vertex) and vector[quiver.index_of(vertex)] != 1:
            return False
    return True


def semisimple_point_smooth(quiver: Quiver, sstype: SemisimpleType) -> bool:
    """Smoothness at a semisimple point, read off its local model at zero"""
    model = local_quiver(quiver, sstype)
    restricted, eps = support_restrict(model.half_quiver, model.eps)
    return zero_point_smooth(restricted, eps)


def _multisets(
    roots: Sequence[Tuple[int, ...]], remainder: Tuple[int, ...], count: int, start: int
) -> Iterator[List[Tuple[int, ...]]]:
    """Nonincreasing (in `roots` order) lists of `count` roots summing to `remainder`"""
    if count == 0:
        if not any(remainder):
            yield []
        return
    if sum(remainder) < count:
        return
    for index in range(start, len(roots)):
        beta = roots[index]
        if all(b <= r for b, r in zip(beta, remainder)):
            rest = tuple(r - b for r, b in zip(remainder, beta))
            for tail in _multisets(roots, rest, count - 1, index):
                yield [beta] + tail


def _as_cyclic_type(quiver: Quiver, parts: List[Tuple[int, ...]]) -> Optional[SemisimpleType]:
    factors = []
    for beta, multiplicity in sorted(Counter(parts).items(), reverse=True):
        if multiplicity <= sum(beta):
            factors.append(SimpleFactor(dim=beta, multiplicity=multiplicity))
        elif p_form(quiver, beta) > 0:
            factors.append(SimpleFactor(dim=beta, multiplicity=multiplicity, distinct=True))
        else:
            return None
    return SemisimpleType(factors=tuple(factors))


def find_singular_witness(
    quiver: Quiver, alpha: DimVectorLike, config: LabConfig = DEFAULT_LAB_CONFIG
) -> Optional[SemisimpleType]:
    """
    Search a cyclic semisimple type with at least two simple summands and Σ e_i β_i = α

    Types are tried by increasing summand count; within a count, in decreasing
    lexicographic order of the factor list. A repeated factor is first read as copies of one
    simple (needs e ≤ |β|), then as pairwise non-isomorphic simples (needs 2p(β) > 0).

    Args:
        quiver: Base quiver Q
        alpha: Dimension vector admitting simples, not a coordinate vector of value 1
        config: Search bound (max_witness_factors)

    Returns:
        The first witness, or None (legitimate for some extended Dynkin cases)
    """
    vector = quiver.vector(alpha)
    if vector.is_zero or not admits_simples(quiver, vector):
        raise PreconditionError(f"find_singular_witness needs simples in dimension {tuple(vector)}")
    if vector.total == 1:
        raise PreconditionError("A one-dimensional vector has no non-simple semisimple points")

    roots = sorted(
        (tuple(beta) for beta in positive_roots_below(quiver, vector) if admits_simples(quiver, beta)),
        reverse=True,
    )
    target = tuple(vector)
    upper = min(vector.total, config.max_witness_factors)
    for count in range(2, upper + 1):
        for parts in _multisets(roots, target, count, 0):
            sstype = _as_cyclic_type(quiver, parts)
            if sstype is not None:
                logger.debug(f"Witness for {target} with {count} summands: {parts}")
                return sstype
    logger.info(f"No semisimple witness for {target} within {upper} summands")
    return None


def lift_local_type(model: LocalModel, local_type: SemisimpleType) -> SemisimpleType:
    """
    Transport a semisimple type over the local quiver to the base quiver

    A local factor γ becomes the base factor Σ_i γ_i β_i. Local factors landing on the same
    base vector are merged; the merged factor is distinct when its classes stay non-isomorphic.
    """
    merged: Dict[Tuple[int, ...], List[SimpleFactor]] = {}
    size = len(model.vertex_factors[0])
    for factor in local_type.factors:
        if len(factor.dim) != len(model.vertex_factors):
            raise PreconditionError(f"Local factor {factor.dim} does not fit {len(model.vertex_factors)} local vertices")
        beta = tuple(
            sum(g * base[k] for g, base in zip(factor.dim, model.vertex_factors)) for k in range(size)
        )
        merged.setdefault(beta, []).append(factor)

    factors = []
    for beta, sources in sorted(merged.items(), reverse=True):
        multiplicity = sum(f.multiplicity for f in sources)
        repeated_class = any(not f.distinct and f.multiplicity > 1 for f in sources)
        distinct = multiplicity > 1 and not repeated_class
        factors.append(SimpleFactor(dim=beta, multiplicity=multiplicity, distinct=distinct))
    return SemisimpleType(factors=tuple(factors))


def witness_via_local_model(
    quiver: Quiver, sstype: SemisimpleType, config: LabConfig = DEFAULT_LAB_CONFIG
) -> Optional[SemisimpleType]:
    """
    Cyclic non-simple semisimple witness near a given semisimple point

    Applies when α = Σ e_i β_i admits simples, 2p(α) > 2 and the point is not simple: the
    witness is searched on the local half quiver at ε and lifted back to Q.

    Returns:
        The lifted witness, or None when the hypotheses fail or the local search is empty
    """
    validate_type(quiver, sstype)
    alpha = sstype.alpha
    if sstype.is_simple or not admits_simples(quiver, alpha) or 2 * p_form(quiver, alpha) <= 2:
        logger.debug(f"Local witness hypotheses fail for {tuple(alpha)}")
        return None
    model = local_quiver(quiver, sstype)
    eps = DimVector(model.eps)
    if not admits_simples(model.half_quiver, eps):
        raise ConsistencyError(f"Local model at {tuple(alpha)} has no simples at eps={model.eps}")
    local_witness = find_singular_witness(model.half_quiver, eps, config=config)
    if local_witness is None:
        return None
    lifted = lift_local_type(model, local_witness)
    if lifted.alpha != alpha:
        raise ConsistencyError(f"Lifted witness sums to {tuple(lifted.alpha)}, expected {tuple(alpha)}")
    try:
        validate_type(quiver, lifted)
    except PreconditionError as exc:
        raise ConsistencyError(f"Lifted witness is not a valid type over the base quiver: {exc}") from exc
    return lifted


def component_smooth(quiver: Quiver, alpha: DimVectorLike) -> SmoothnessVerdict:
    """
    Smoothness of the component of Rep^α Π(Q) containing simples

    The component is smooth exactly when all of its points are simple, i.e. after support
    restriction Q has one vertex and α = (1).
    """
    vector = quiver.vector(alpha)
    if vector.is_zero or not admits_simples(quiver, vector):
        return SmoothnessVerdict(verdict=Verdict.OUT_OF_SCOPE, reason=ReasonTag.NO_SIMPLES,
                                 detail="no simple representations in this dimension vector")
    restricted, sincere = support_restrict(quiver, vector)
    if restricted.vertex_count == 1 and tuple(sincere) == (1,):
        return SmoothnessVerdict(verdict=Verdict.SMOOTH, reason=ReasonTag.COMPONENT_CRITERION,
                                 detail="every point is simple")
    return SmoothnessVerdict(verdict=Verdict.SINGULAR, reason=ReasonTag.COMPONENT_CRITERION,
                             detail="contains a cyclic non-simple semisimple point")
