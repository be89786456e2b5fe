"""
Dynkin / extended Dynkin / wild classification of connected quivers.

Orientation is ignored. A component is Dynkin iff its symmetric form is positive
definite, and extended Dynkin iff the form is singular while deleting some vertex
leaves a positive definite form (the radical is then spanned by δ).
"""
import logging
from math import gcd
from typing import Dict, List, Optional, Tuple

from sympy import Matrix, ilcm

from .forms import sym_form
from .graph import component_vertex_sets, subquiver
from .models import ClassTag, Quiver, QuiverClass

logger = logging.getLogger(__name__)


def cartan_matrix(quiver: Quiver) -> Matrix:
    """Gram matrix of sym_form on the coordinate vectors"""
    size = quiver.vertex_count
    basis = [quiver.coordinate_vector(v) for v in quiver.vertices]
    return Matrix(size, size, lambda i, j: sym_form(quiver, basis[i], basis[j]))


def _positive_definite(matrix: Matrix) -> bool:
    # Sylvester's criterion, exact over the integers
    return all(matrix[:k, :k].det() > 0 for k in range(1, matrix.rows + 1))


def _primitive_positive(vector: Matrix) -> Tuple[int, ...]:
    denominators = [entry.q for entry in vector]
    scale = ilcm(*denominators) if len(denominators) > 1 else denominators[0]
    integral = [int(entry * scale) for entry in vector]
    divisor = 0
    for value in integral:
        divisor = gcd(divisor, abs(value))
    sign = -1 if integral[0] < 0 else 1
    return tuple(sign * value // divisor for value in integral)


def _degrees(quiver: Quiver) -> Dict[str, int]:
    degrees = {v: 0 for v in quiver.vertices}
    for arrow in quiver.arrows:
        degrees[arrow.tail] += 1
        degrees[arrow.head] += 1
    return degrees


def _arm_lengths(quiver: Quiver, branch: str) -> List[int]:
    adjacency: Dict[str, List[str]] = {v: [] for v in quiver.vertices}
    for arrow in quiver.arrows:
        adjacency[arrow.tail].append(arrow.head)
        adjacency[arrow.head].append(arrow.tail)
    arms = []
    for start in adjacency[branch]:
        length, previous, current = 1, branch, start
        while True:
            onward = [v for v in adjacency[current] if v != previous]
            if not onward:
                break
            previous, current = current, onward[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def dynkin_type(quiver: Quiver, tag: ClassTag) -> Optional[str]:
    """
    Type name of a connected Dynkin or extended Dynkin quiver.

    Extended types are written with a leading '~' (~A_n, ~D_n, ~E_n); the Jordan quiver is ~A_0.
    """
    n = quiver.vertex_count
    degrees = _degrees(quiver)
    if tag == ClassTag.DYNKIN:
        branches = [v for v, d in degrees.items() if d >= 3]
        if not branches:
            return f"A_{n}"
        arms = _arm_lengths(quiver, branches[0])
        if arms[0] == 1 and arms[1] == 1:
            return f"D_{n}"
        return {(1, 2, 2): "E_6", (1, 2, 3): "E_7", (1, 2, 4): "E_8"}.get(tuple(arms))
    if tag == ClassTag.EXTENDED_DYNKIN:
        if all(d == 2 for d in degrees.values()):
            return f"~A_{n - 1}"
        if any(d == 4 for d in degrees.values()):
            return "~D_4"
        branches = [v for v, d in degrees.items() if d == 3]
        if len(branches) == 2:
            return f"~D_{n - 1}"
        arms = tuple(_arm_lengths(quiver, branches[0]))
        return {(2, 2, 2): "~E_6", (1, 3, 3): "~E_7", (1, 2, 5): "~E_8"}.get(arms)
    return None


def classify_connected(quiver: Quiver) -> QuiverClass:
    """Classify a connected quiver"""
    vertices = quiver.vertices
    if any(a.is_loop for a in quiver.arrows):
        if quiver.vertex_count == 1 and quiver.arrow_count == 1:
            return QuiverClass(tag=ClassTag.EXTENDED_DYNKIN, vertices=vertices, type_name="~A_0", delta=(1,))
        return QuiverClass(tag=ClassTag.WILD, vertices=vertices)

    form = cartan_matrix(quiver)
    if _positive_definite(form):
        return QuiverClass(tag=ClassTag.DYNKIN, vertices=vertices, type_name=dynkin_type(quiver, ClassTag.DYNKIN))

    if form.det() == 0:
        for drop in range(quiver.vertex_count):
            keep = [i for i in range(quiver.vertex_count) if i != drop]
            if _positive_definite(form.extract(keep, keep)):
                radical = form.nullspace()
                delta = _primitive_positive(radical[0])
                logger.debug(f"Extended Dynkin component {vertices} with delta {delta}")
                return QuiverClass(
                    tag=ClassTag.EXTENDED_DYNKIN,
                    vertices=vertices,
                    type_name=dynkin_type(quiver, ClassTag.EXTENDED_DYNKIN),
                    delta=delta,
                )
    return QuiverClass(tag=ClassTag.WILD, vertices=vertices)


def classify(quiver: Quiver) -> List[QuiverClass]:
    """
    Classify every connected component against the ADE / extended ADE families

    Args:
        quiver: Any finite quiver; loops are allowed

    Returns:
        One QuiverClass per connected component, in vertex order
    """
    return [classify_connected(subquiver(quiver, members)) for members in component_vertex_sets(quiver)]
