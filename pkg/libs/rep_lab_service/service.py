"""
Representation Lab Service Interface

Relation checks, End/Hom dimensions, tangent spaces of representation varieties, Ext
profiles, simplicity and cyclicity at explicit rational matrix representations.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from libs.lab_config import DEFAULT_LAB_CONFIG, LabConfig
from libs.quiver_service import ConsistencyError, PreconditionError, half_quiver, p_form, sym_form

from . import linalg
from .linalg import RationalSampler, SpanBuilder
from .models import CyclicResult, CyclicStatus, ExtProfile, RepKind, SimplicityCertificate
from .representations import AbstractRepresentation, QuiverMatrixRep, SurfaceMatrixRep

logger = logging.getLogger(__name__)


def check_preprojective(rep: QuiverMatrixRep) -> bool:
    """Σ_a [ρ(a), ρ(a*)] = 0"""
    return rep.relation_holds()


def check_surface(rep: SurfaceMatrixRep) -> bool:
    """Π_i [X_i, Y_i] = I, with exact inverses"""
    return rep.relation_holds()


def _intertwiner_system(source: AbstractRepresentation, target: AbstractRepresentation) -> DomainMatrix:
    """Linear conditions F·A - B·F = 0 on F: source -> target, one block per generator pair"""
    m, n = source.size, target.size
    unknowns = n * m
    rows: List[List] = []
    for a_mat, b_mat in zip(source.actions(), target.actions()):
        a, b = a_mat.to_list(), b_mat.to_list()
        for r in range(n):
            for c in range(m):
                row = [QQ.zero] * unknowns
                # (F A)[r][c] = Σ_s F[r][s] A[s][c]
                for s in range(m):
                    if a[s][c] != QQ.zero:
                        row[r * m + s] += a[s][c]
                # (B F)[r][c] = Σ_t B[r][t] F[t][c]
                for t in range(n):
                    if b[r][t] != QQ.zero:
                        row[t * m + c] -= b[r][t]
                if any(x != QQ.zero for x in row):
                    rows.append(row)
    return DomainMatrix(rows, (len(rows), unknowns), QQ)


def hom_dim(source: AbstractRepresentation, target: AbstractRepresentation) -> int:
    """
    dim Hom_A(M, N) for two representations of the same algebra

    Args:
        source: M
        target: N

    Returns:
        Dimension of the space of module maps M -> N
    """
    if source.signature != target.signature:
        raise PreconditionError("Hom needs representations of the same algebra")
    system = _intertwiner_system(source, target)
    return source.size * target.size - linalg.rank(system)


def end_dim(rep: AbstractRepresentation) -> int:
    """dim End_A(M) = h⁰"""
    return hom_dim(rep, rep)


def _preprojective_tangent_matrix(rep: QuiverMatrixRep) -> Tuple[DomainMatrix, int]:
    n = rep.size
    partner = {}
    for a, a_star in rep.star_pairs():
        partner[a] = (a_star, True)
        partner[a_star] = (a, False)
    columns = []
    for arrow in rep.quiver.arrows:
        other, unstarred = partner[arrow.label]
        rho = rep.matrix(other)
        for i in rep.vertex_range(arrow.head):
            for j in rep.vertex_range(arrow.tail):
                e = linalg.unit(n, i, j)
                # d/dX_a of [ρ(a), ρ(a*)] is [X_a, ρ(a*)]; of the starred slot, [ρ(a), X_a*]
                image = e * rho - rho * e if unstarred else rho * e - e * rho
                columns.append(linalg.flatten(image))
    if not columns:
        return linalg.zeros(n * n, 0), 0
    return linalg.columns_matrix(columns, n * n), len(columns)


def tangent_dim_preprojective(rep: QuiverMatrixRep) -> int:
    """
    dim of the Zariski tangent space of Rep^α Π(Q) at ρ

    The kernel of the differential (X_a) ↦ Σ_a [X_a, ρ(a*)] + [ρ(a), X_{a*}] of the
    moment map, over the block-shaped tangent matrices of every arrow of the double quiver.
    """
    rep.require_relation()
    jacobian, unknowns = _preprojective_tangent_matrix(rep)
    return unknowns - linalg.rank(jacobian)


def _relator_letters(rep: SurfaceMatrixRep) -> List[Tuple[int, int]]:
    """(generator index, ±1) along X_1 Y_1 X_1^{-1} Y_1^{-1} ... X_g Y_g X_g^{-1} Y_g^{-1}"""
    letters = []
    for x, y in rep.pairs:
        letters.extend([(x, 1), (y, 1), (x, -1), (y, -1)])
    return letters


def fox_jacobian(rep: SurfaceMatrixRep) -> DomainMatrix:
    """
    n² x 2g·n² matrix of the derivative of the relator at ρ

    The derivative of a word is Σ_k ρ(prefix_k)·δ(letter_k)·ρ(suffix_k), with
    δ(x) = ξ_x and δ(x^{-1}) = -ρ(x)^{-1} ξ_x ρ(x)^{-1}; each letter contributes L_k ξ R_k.
    """
    n = rep.size
    letters = _relator_letters(rep)
    values = [rep.matrices[g] if sign > 0 else rep.inverses[g] for g, sign in letters]
    prefixes = [linalg.identity(n)]
    for value in values:
        prefixes.append(prefixes[-1] * value)
    suffixes = [linalg.identity(n)]
    for value in reversed(values):
        suffixes.append(value * suffixes[-1])
    suffixes.reverse()

    sandwiches = {g: [] for g in range(len(rep.matrices))}
    for k, (g, sign) in enumerate(letters):
        left, right = prefixes[k], suffixes[k + 1]
        if sign < 0:
            inv = rep.inverses[g]
            left, right = -(left * inv), inv * right
        sandwiches[g].append((left.to_list(), right.to_list()))

    columns = []
    for g in range(len(rep.matrices)):
        for r in range(n):
            for s in range(n):
                column = [QQ.zero] * (n * n)
                # (L E_rs R)[p][q] = L[p][r] R[s][q]
                for left, right in sandwiches[g]:
                    for p in range(n):
                        if left[p][r] == QQ.zero:
                            continue
                        for q in range(n):
                            column[p * n + q] += left[p][r] * right[s][q]
                columns.append(column)
    return linalg.columns_matrix(columns, n * n)


def tangent_dim_surface(rep: SurfaceMatrixRep) -> int:
    """2g·n² - rank of the Fox Jacobian of the relator at ρ"""
    rep.require_relation()
    n = rep.size
    return 2 * rep.genus * n * n - linalg.rank(fox_jacobian(rep))


def tangent_dim(rep: AbstractRepresentation) -> int:
    if rep.kind == RepKind.SURFACE:
        return tangent_dim_surface(rep)
    return tangent_dim_preprojective(rep)


def ext_profile(rep: AbstractRepresentation) -> ExtProfile:
    """
    (h⁰, h¹, h², T) with h⁰ = dim End, h¹ = T - Σα_v² + h⁰ and h² = h⁰

    Raises:
        ConsistencyError: when the computed h¹ is negative
    """
    h0 = end_dim(rep)
    tangent = tangent_dim(rep)
    h1 = tangent - rep.square_sum + h0
    if h1 < 0:
        raise ConsistencyError(f"Negative h1={h1} from tangent {tangent} and End dimension {h0}")
    return ExtProfile(h0=h0, h1=h1, h2=h0, tangent_dim=tangent)


def expected_tangent_dim(rep: AbstractRepresentation, end: Optional[int] = None) -> int:
    """
    Closed form of the tangent dimension in terms of dim End

    2p(α) + α·α - 2 + h⁰ for Π(Q) (p taken on Q), (2g-1)n² + h⁰ for the surface group.
    """
    h0 = end_dim(rep) if end is None else end
    if rep.kind == RepKind.SURFACE:
        return (2 * rep.genus - 1) * rep.size * rep.size + h0
    base = half_quiver(rep.quiver)
    return 2 * p_form(base, rep.alpha) + rep.square_sum - 2 + h0


def expected_euler_characteristic(rep: AbstractRepresentation) -> int:
    """h⁰ - h¹ + h²: (α, α) on Q for Π(Q), (2-2g)n² for the surface group"""
    if rep.kind == RepKind.SURFACE:
        return (2 - 2 * rep.genus) * rep.size * rep.size
    return sym_form(half_quiver(rep.quiver), rep.alpha, rep.alpha)


def simplicity_certificate(rep: AbstractRepresentation) -> SimplicityCertificate:
    """
    Span the image of the algebra in Mat_n

    Starts from the idempotents and closes under left multiplication by the generators
    until a round adds nothing. The module is simple iff the span is all of Mat_n.
    """
    rep.require_relation()
    n = rep.size
    if n == 0:
        raise PreconditionError("The zero representation is not simple")
    span = SpanBuilder(n * n)
    frontier = [e for e in rep.idempotents() if span.add(linalg.flatten(e))]
    generators = list(rep.generators().values())
    rounds = 0
    while frontier and not span.is_full:
        rounds += 1
        fresh = []
        for element in frontier:
            for generator in generators:
                product = generator * element
                if span.add(linalg.flatten(product)):
                    fresh.append(product)
        frontier = fresh
    logger.debug(f"Algebra image spans {len(span)} of {n * n} after {rounds} rounds")
    return SimplicityCertificate(simple=span.is_full, span_dim=len(span), target_dim=n * n, rounds=rounds)


def is_simple(rep: AbstractRepresentation) -> bool:
    return simplicity_certificate(rep).simple


def cyclic_span(rep: AbstractRepresentation, vector: Sequence) -> Tuple[int, int]:
    """(dimension, closure rounds) of the submodule generated by `vector`"""
    n = rep.size
    start = [linalg.qq(x) for x in vector]
    if len(start) != n:
        raise PreconditionError(f"Vector has {len(start)} entries, representation has dimension {n}")
    actions = rep.actions()
    span = SpanBuilder(n)
    frontier = [start] if span.add(start) else []
    rounds = 0
    while frontier and not span.is_full:
        rounds += 1
        fresh = []
        for element in frontier:
            for action in actions:
                image = linalg.apply(action, element)
                if span.add(image):
                    fresh.append(image)
        frontier = fresh
    if rounds > n:
        raise ConsistencyError(f"Cyclic closure took {rounds} rounds in dimension {n}")
    return len(span), rounds


def _multiplicity_violation(rep: AbstractRepresentation) -> Optional[str]:
    for dim, copies in rep.semisimple_parts or ():
        if copies > dim:
            return f"a simple of dimension {dim} occurs {copies} times"
    return None


def has_cyclic_vector(
    rep: AbstractRepresentation,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    config: LabConfig = DEFAULT_LAB_CONFIG,
) -> CyclicResult:
    """
    Search a cyclic vector

    Standard basis vectors are tried first, then `trials` seeded random rational vectors.
    No is only answered for known semisimple modules with a multiplicity above the
    dimension of its simple.

    Args:
        rep: Representation satisfying its relation
        trials: Random trials (defaults to config.trials)
        seed: Seed of the random vectors (defaults to config.seed)
        config: Lab configuration

    Returns:
        CyclicResult with status Yes, No or NotFound
    """
    rep.require_relation()
    trials = config.trials if trials is None else trials
    seed = config.seed if seed is None else seed
    n = rep.size

    violation = _multiplicity_violation(rep)
    if violation is not None:
        return CyclicResult(status=CyclicStatus.NO, reason=violation, seed=seed)

    candidates: List[List] = [[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)]
    sampler = RationalSampler(seed, config.rational_bound)
    candidates.extend(sampler.vector(n) for _ in range(trials))
    for vector in candidates:
        dim, rounds = cyclic_span(rep, vector)
        if dim == n:
            return CyclicResult(
                status=CyclicStatus.YES,
                vector=tuple(linalg.format_scalar(x) for x in vector),
                rounds=rounds,
                trials=trials,
                seed=seed,
            )
    logger.info(f"No cyclic vector among {n} basis vectors and {trials} random trials (seed {seed})")
    return CyclicResult(status=CyclicStatus.NOT_FOUND, trials=trials, seed=seed,
                        reason=f"{n} basis vectors and {trials} random vectors tried")


def is_two_sided_point(rep: AbstractRepresentation, vector: Sequence) -> bool:
    """A cyclic module A/I has I two-sided iff dim End(A/I) = n"""
    dim, _ = cyclic_span(rep, vector)
    if dim != rep.size:
        raise PreconditionError("The given vector does not generate the representation")
    return end_dim(rep) == rep.size


class RepLabInterface:
    """High-level interface binding the lab operations to one LabConfig"""

    def __init__(self, config: LabConfig = DEFAULT_LAB_CONFIG):
        self.config = config

    def verify(self, rep: AbstractRepresentation) -> bool:
        return rep.relation_holds()

    def end_dim(self, rep: AbstractRepresentation) -> int:
        rep.require_relation()
        return end_dim(rep)

    def tangent_dim(self, rep: AbstractRepresentation) -> int:
        return tangent_dim(rep)

    def profile(self, rep: AbstractRepresentation) -> ExtProfile:
        rep.require_relation()
        return ext_profile(rep)

    def simplicity(self, rep: AbstractRepresentation) -> SimplicityCertificate:
        return simplicity_certificate(rep)

    def cyclic(self, rep: AbstractRepresentation, trials: Optional[int] = None, seed: Optional[int] = None) -> CyclicResult:
        return has_cyclic_vector(rep, trials=trials, seed=seed, config=self.config)
