"""
Brute-force oracles used to cross-check the production algorithms on small inputs
"""
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Tuple

from libs.quiver_service import Quiver, p_form, support_is_connected, sym_form


def reflection_orbit_roots(quiver: Quiver, bound: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    """
    Positive roots ≤ bound: real roots from the reflection orbit of the coordinate vectors
    at loop-free vertices, imaginary roots from W-translates of the fundamental set.

    Reducing a root towards its seed only lowers coordinates, so orbits never need to
    leave the box below the bound.
    """
    size = quiver.vertex_count
    box = tuple(bound)
    loop_free = [i for i, v in enumerate(quiver.vertices) if not quiver.has_loop(v)]

    def coordinate(i: int) -> Tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(size))

    def pairing(alpha, i) -> int:
        return sym_form(quiver, alpha, coordinate(i))

    def reflect(alpha, i):
        shift = pairing(alpha, i)
        return tuple(x - shift if j == i else x for j, x in enumerate(alpha))

    def inside(alpha) -> bool:
        return all(0 <= x <= m for x, m in zip(alpha, box))

    seeds = {coordinate(i) for i in range(size)}
    for candidate in product(*(range(m + 1) for m in box)):
        if not any(candidate) or not support_is_connected(quiver, candidate):
            continue
        if all(pairing(candidate, i) <= 0 for i in range(size)):
            seeds.add(candidate)

    found = set()
    frontier = [s for s in seeds if inside(s)]
    found.update(frontier)
    while frontier:
        fresh = []
        for alpha in frontier:
            for i in loop_free:
                image = reflect(alpha, i)
                if inside(image) and image not in found and any(image):
                    found.add(image)
                    fresh.append(image)
        frontier = fresh
    return frozenset(a for a in found if all(x <= b for x, b in zip(a, bound)))


def naive_admits_simples(quiver: Quiver, alpha: Tuple[int, ...], roots: FrozenSet[Tuple[int, ...]]) -> bool:
    """α is a root and p(α) > Σ p(βⁱ) over every decomposition into ≥ 2 positive roots"""
    if alpha not in roots:
        return False
    ordered = sorted(roots, reverse=True)

    @lru_cache(maxsize=None)
    def best(gamma: Tuple[int, ...], start: int) -> int:
        """max Σp over decompositions of γ into roots taken from ordered[start:] (non-increasing)"""
        if not any(gamma):
            return 0
        value = None
        for index in range(start, len(ordered)):
            beta = ordered[index]
            rest = tuple(g - b for g, b in zip(gamma, beta))
            if min(rest) < 0:
                continue
            tail = best(rest, index)
            if tail is not None:
                total = p_form(quiver, beta) + tail
                value = total if value is None else max(value, total)
        return value

    p_alpha = p_form(quiver, alpha)
    for index, beta in enumerate(ordered):
        if beta == alpha:
            continue
        rest = tuple(a - b for a, b in zip(alpha, beta))
        if min(rest) < 0:
            continue
        tail = best(rest, index)
        if tail is not None and p_form(quiver, beta) + tail >= p_alpha:
            return False
    return True
