"""
Constructors of representations: direct sums, lifts of quiver representations, certified
simples, two-sided ideal points and the extended Dynkin cyclic example.
"""
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from libs.lab_config import DEFAULT_LAB_CONFIG, LabConfig
from libs.moduli_service import admits_simples
from libs.quiver_service import (
    Arrow,
    ClassTag,
    DimVectorLike,
    PreconditionError,
    Quiver,
    classify_connected,
    double_quiver,
    is_connected,
)

from . import linalg
from .linalg import RationalSampler
from .models import ConstructionError, Provenance
from .representations import AbstractRepresentation, QuiverMatrixRep, SurfaceMatrixRep
from .service import hom_dim, is_simple

logger = logging.getLogger(__name__)


def build_semisimple(parts: Sequence[Tuple[AbstractRepresentation, int]]) -> AbstractRepresentation:
    """
    Block-diagonal sum ⊕ S_i^{e_i}

    When every summand is certified simple, isomorphic summands (Hom ≠ 0) are merged and
    the result records its (dim S, multiplicity) per isomorphism class.
    """
    if not parts:
        raise PreconditionError("A direct sum needs at least one summand")
    signature = parts[0][0].signature
    if any(rep.signature != signature for rep, _ in parts):
        raise PreconditionError("Direct sums of representations of different algebras")
    if any(multiplicity < 1 for _, multiplicity in parts):
        raise PreconditionError("Multiplicities must be positive")

    total: Optional[AbstractRepresentation] = None
    for rep, multiplicity in parts:
        for _ in range(multiplicity):
            total = rep if total is None else total.direct_sum(rep)

    if all(is_simple(rep) for rep, _ in parts):
        classes: List[List] = []
        for rep, multiplicity in parts:
            for entry in classes:
                if entry[0].size == rep.size and hom_dim(entry[0], rep) > 0:
                    entry[1] += multiplicity
                    break
            else:
                classes.append([rep, multiplicity])
        total.semisimple_parts = tuple((rep.size, multiplicity) for rep, multiplicity in classes)
    total.provenance = Provenance(builder="semisimple")
    return total


def lift_quiver_rep(quiver: Quiver, alpha: DimVectorLike, matrices: Mapping[str, Sequence[Sequence]]) -> QuiverMatrixRep:
    """Representation of Π(Q) from one of Q: the starred arrows act by zero"""
    if quiver.star_pairs:
        raise PreconditionError("lift_quiver_rep expects the quiver Q, not its double")
    return QuiverMatrixRep(double_quiver(quiver), alpha, matrices, provenance=Provenance(builder="lift"))


def random_quiver_rep(
    quiver: Quiver, alpha: DimVectorLike, seed: Optional[int] = None, config: LabConfig = DEFAULT_LAB_CONFIG
) -> QuiverMatrixRep:
    """Seeded random representation of Q lifted to Π(Q)"""
    seed = config.seed if seed is None else seed
    vector = quiver.vector(alpha)
    sampler = RationalSampler(seed, config.rational_bound)
    dims = dict(zip(quiver.vertices, vector))
    matrices = {a.label: sampler.block(dims[a.head], dims[a.tail]) for a in quiver.arrows}
    rep = lift_quiver_rep(quiver, vector, matrices)
    rep.provenance = Provenance(builder="random-quiver", seed=seed)
    return rep


def _solve_starred(double: Quiver, alpha, unstarred: Dict[str, List[List]], sampler: RationalSampler) -> Optional[QuiverMatrixRep]:
    """Random solution of Σ_a [ρ(a), X_{a*}] = 0 in the starred blocks, given ρ on Q"""
    base = QuiverMatrixRep(double, alpha, unstarred)
    n = base.size
    slots = []
    for a, a_star in double.star_pairs:
        arrow = double.arrow(a_star)
        for i in base.vertex_range(arrow.head):
            for j in base.vertex_range(arrow.tail):
                slots.append((a, a_star, i, j))
    if not slots:
        return base
    columns = []
    for a, _, i, j in slots:
        e = linalg.unit(n, i, j)
        rho = base.matrix(a)
        columns.append(linalg.flatten(rho * e - e * rho))
    solutions = linalg.nullspace(linalg.columns_matrix(columns, n * n))
    if not solutions:
        return None
    values = sampler.combination(solutions)
    blocks = {label: [list(row) for row in block] for label, block in base.blocks.items()}
    for value, (_, a_star, i, j) in zip(values, slots):
        arrow = double.arrow(a_star)
        blocks[a_star][i - base.offsets[arrow.head]][j - base.offsets[arrow.tail]] = value
    return QuiverMatrixRep(double, alpha, blocks)


def build_quiver_simple(
    quiver: Quiver, alpha: DimVectorLike, seed: Optional[int] = None, config: LabConfig = DEFAULT_LAB_CONFIG
) -> QuiverMatrixRep:
    """
    Certified simple Π(Q)-representation of dimension vector α

    Random matrices on the arrows of Q, then a random solution of the preprojective
    relation, which is linear in the starred arrows. Retried until is_simple holds.

    Raises:
        PreconditionError: α admits no simples
        ConstructionError: quiver_retries exhausted
    """
    seed = config.seed if seed is None else seed
    vector = quiver.vector(alpha)
    if vector.is_zero or not admits_simples(quiver, vector):
        raise PreconditionError(f"No simple representations of dimension {tuple(vector)}")
    double = double_quiver(quiver)
    dims = dict(zip(quiver.vertices, vector))
    root = RationalSampler(seed, config.rational_bound)
    for attempt in range(config.quiver_retries):
        sampler = root.spawn(attempt)
        unstarred = {a.label: sampler.block(dims[a.head], dims[a.tail]) for a in quiver.arrows}
        rep = _solve_starred(double, vector, unstarred, sampler)
        if rep is not None and rep.relation_holds() and is_simple(rep):
            rep.provenance = Provenance(builder="quiver-simple", seed=seed, attempts=attempt + 1)
            logger.debug(f"Simple of dimension {tuple(vector)} after {attempt + 1} attempts")
            return rep
    raise ConstructionError(
        f"No simple of dimension {tuple(vector)} in {config.quiver_retries} attempts (seed {seed})"
    )


def solve_commutator_equation(
    x: DomainMatrix, d: DomainMatrix, sampler: RationalSampler, trials: int = 25
) -> Optional[DomainMatrix]:
    """
    Invertible Y with X Y X^{-1} Y^{-1} = D, or None

    Y ranges over the nullspace of Y ↦ XY - DYX; random combinations are tried until one
    is invertible and verifies exactly.
    """
    n = x.shape[0]
    columns = []
    for r in range(n):
        for s in range(n):
            e = linalg.unit(n, r, s)
            columns.append(linalg.flatten(x * e - d * e * x))
    solutions = linalg.nullspace(linalg.columns_matrix(columns, n * n))
    if not solutions:
        return None
    x_inv = linalg.inverse(x)
    candidates = [solutions[0]] if len(solutions) == 1 else []
    candidates.extend(sampler.combination(solutions) for _ in range(trials))
    for values in candidates:
        y = linalg.unflatten(values, n)
        if linalg.is_invertible(y) and linalg.commutator(x, y, x_inv) == d:
            return y
    return None


def build_surface_simple(
    genus: int, n: int, seed: Optional[int] = None, config: LabConfig = DEFAULT_LAB_CONFIG
) -> SurfaceMatrixRep:
    """
    Certified simple representation of the genus-g surface group in dimension n, g > 1

    Pairs 1..g-2 commute (Y_i drawn from the centralizer of X_i). The pair g-1 is random
    and the last pair is X_g = Y_{g-1} with Y_g solving [X_g, Y_g] = [X_{g-1}, Y_{g-1}]^{-1}.

    Raises:
        ConstructionError: surface_retries exhausted
    """
    if genus < 2:
        raise PreconditionError(f"Simple surface representations are built for genus > 1, got {genus}")
    if n < 1:
        raise PreconditionError(f"Dimension must be >= 1, got {n}")
    seed = config.seed if seed is None else seed
    root = RationalSampler(seed, config.rational_bound)
    identity = linalg.identity(n)
    for attempt in range(config.surface_retries):
        sampler = root.spawn(attempt)
        if n == 1:
            matrices = [linalg.matrix([[sampler.scalar(nonzero=True)]]) for _ in range(2 * genus)]
        else:
            matrices = []
            for _ in range(genus - 2):
                x = sampler.invertible(n)
                y = solve_commutator_equation(x, identity, sampler, config.commutator_trials)
                matrices.extend([x, y if y is not None else identity])
            x_prev, y_prev = sampler.invertible(n), sampler.invertible(n)
            target = linalg.inverse(linalg.commutator(x_prev, y_prev))
            y_last = solve_commutator_equation(y_prev, target, sampler, config.commutator_trials)
            if y_last is None:
                logger.debug(f"Commutator equation unsolved on attempt {attempt + 1}")
                continue
            matrices.extend([x_prev, y_prev, y_prev, y_last])
        rep = SurfaceMatrixRep(genus, matrices)
        if rep.relation_holds() and is_simple(rep):
            rep.provenance = Provenance(builder="surface-simple", seed=seed, attempts=attempt + 1)
            return rep
    logger.error(f"build_surface_simple(g={genus}, n={n}) failed after {config.surface_retries} attempts")
    raise ConstructionError(
        f"No simple surface representation for g={genus}, n={n} in {config.surface_retries} attempts (seed {seed})"
    )


def build_two_sided_point(genus: int, n: int) -> Tuple[SurfaceMatrixRep, List]:
    """
    Cyclic representation with End of dimension n

    X_1 = I + N with N the regular nilpotent shift e_i -> e_{i+1}; every other generator is
    the identity. e_1 is a cyclic vector.
    """
    if genus < 2:
        raise PreconditionError(f"Two-sided ideal points are built for genus > 1, got {genus}")
    if n < 1:
        raise PreconditionError(f"Dimension must be >= 1, got {n}")
    rows = [[1 if i == j or i == j + 1 else 0 for j in range(n)] for i in range(n)]
    identity = linalg.identity(n)
    matrices = [linalg.matrix(rows)] + [identity] * (2 * genus - 1)
    rep = SurfaceMatrixRep(genus, matrices, provenance=Provenance(builder="two-sided-point"))
    vector = [QQ.one] + [QQ.zero] * (n - 1)
    return rep, vector


def dtilde4_quiver() -> Quiver:
    """Four leaves l1..l4 pointing to the centre c"""
    vertices = ("c", "l1", "l2", "l3", "l4")
    arrows = tuple(Arrow(label=f"a{i}", tail=f"l{i}", head="c") for i in range(1, 5))
    return Quiver(vertices=vertices, arrows=arrows)


def build_extended_dynkin_cyclic(quiver: Optional[Quiver] = None) -> Tuple[QuiverMatrixRep, List]:
    """
    Cyclic non-simple Π(Q)-representation of dimension δ on D̃_4 with End ⊇ k ⊕ k

    From a leaf l1, the arrow towards the centre gets the full-rank map [[1], [0]]; arrows
    into the remaining leaves are terminal and get rank dim - 1 = 0; every other map is zero.
    The cyclic vector is the sum over vertices of one basis vector, taking the second basis
    vector at the centre.

    Args:
        quiver: A D̃_4 quiver (any orientation); defaults to all leaves pointing inwards

    Returns:
        (representation over the double quiver, cyclic vector)
    """
    quiver = dtilde4_quiver() if quiver is None else quiver
    if not is_connected(quiver):
        raise PreconditionError("build_extended_dynkin_cyclic needs a connected D̃_4 quiver")
    quiver_class = classify_connected(quiver)
    if quiver_class.tag != ClassTag.EXTENDED_DYNKIN or quiver_class.type_name != "~D_4":
        raise PreconditionError(f"Expected a ~D_4 quiver, got {quiver_class.type_name}")
    delta = dict(zip(quiver_class.vertices, quiver_class.delta))
    alpha = quiver.vector([delta[v] for v in quiver.vertices])
    centre = next(v for v in quiver.vertices if delta[v] == 2)
    leaves = [v for v in quiver.vertices if v != centre]
    first = leaves[0]

    double = double_quiver(quiver)
    blocks: Dict[str, List[List]] = {}
    for a, a_star in double.star_pairs:
        arrow = double.arrow(a)
        if {arrow.tail, arrow.head} == {first, centre}:
            outgoing = a if arrow.tail == first else a_star
            blocks[outgoing] = [[1], [0]]
    rep = QuiverMatrixRep(double, alpha, blocks, provenance=Provenance(builder="extended-dynkin-cyclic"))

    vector = [QQ.zero] * rep.size
    for vertex in quiver.vertices:
        offset = rep.offsets[vertex]
        vector[offset + (1 if vertex == centre else 0)] = QQ.one
    return rep, vector
