"""
Structural operations on quivers: doubling, components, restriction to supports
"""
import logging
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .models import Arrow, DimVector, DimVectorLike, Quiver

logger = logging.getLogger(__name__)


def _star_label(label: str, used: Set[str]) -> str:
    candidate = f"{label}*"
    while candidate in used:
        candidate += "*"
    return candidate


def double_quiver(quiver: Quiver) -> Quiver:
    """
    Adjoin an arrow a*: j -> i for each arrow a: i -> j.

    Star labels are derived from the originals by appending '*' (more stars on collision).
    The returned quiver records the (a, a*) pairs.
    """
    used = {a.label for a in quiver.arrows}
    starred: List[Arrow] = []
    pairs: List[Tuple[str, str]] = []
    for arrow in quiver.arrows:
        star = _star_label(arrow.label, used)
        used.add(star)
        starred.append(Arrow(label=star, tail=arrow.head, head=arrow.tail))
        pairs.append((arrow.label, star))
    return Quiver(vertices=quiver.vertices, arrows=quiver.arrows + tuple(starred), star_pairs=tuple(pairs))


def half_quiver(quiver: Quiver) -> Quiver:
    """Inverse of double_quiver on quivers carrying star pairs"""
    keep = {a for a, _ in quiver.star_pairs}
    return Quiver(vertices=quiver.vertices, arrows=tuple(a for a in quiver.arrows if a.label in keep))


def reverse_arrow(quiver: Quiver, label: str) -> Quiver:
    """Return the quiver with one arrow reversed"""
    arrows = tuple(
        Arrow(label=a.label, tail=a.head, head=a.tail) if a.label == label else a for a in quiver.arrows
    )
    if arrows == quiver.arrows and not any(a.label == label for a in quiver.arrows):
        raise KeyError(f"Unknown arrow: {label}")
    return Quiver(vertices=quiver.vertices, arrows=arrows)


def subquiver(quiver: Quiver, vertices: Iterable[str], arrow_labels: Iterable[str] = None) -> Quiver:
    """
    Subquiver on the given vertices (kept in the parent's order).

    Without `arrow_labels` all arrows between kept vertices are kept (full subquiver).
    """
    keep = set(vertices)
    ordered = tuple(v for v in quiver.vertices if v in keep)
    if arrow_labels is None:
        arrows = tuple(a for a in quiver.arrows if a.tail in keep and a.head in keep)
    else:
        wanted = set(arrow_labels)
        arrows = tuple(a for a in quiver.arrows if a.label in wanted)
    return Quiver(vertices=ordered, arrows=arrows)


def _neighbours(quiver: Quiver) -> Dict[str, Set[str]]:
    adjacency: Dict[str, Set[str]] = {v: set() for v in quiver.vertices}
    for arrow in quiver.arrows:
        adjacency[arrow.tail].add(arrow.head)
        adjacency[arrow.head].add(arrow.tail)
    return adjacency


def component_vertex_sets(quiver: Quiver) -> List[Tuple[str, ...]]:
    """Vertex sets of the components of the underlying undirected graph, ordered by first vertex"""
    adjacency = _neighbours(quiver)
    seen: Set[str] = set()
    components: List[Tuple[str, ...]] = []
    for start in quiver.vertices:
        if start in seen:
            continue
        stack = [start]
        members = {start}
        while stack:
            current = stack.pop()
            for nxt in adjacency[current]:
                if nxt not in members:
                    members.add(nxt)
                    stack.append(nxt)
        seen |= members
        components.append(tuple(v for v in quiver.vertices if v in members))
    return components


def connected_components(quiver: Quiver) -> List[Quiver]:
    """Connected components of the underlying undirected graph as full subquivers"""
    return [subquiver(quiver, members) for members in component_vertex_sets(quiver)]


def is_connected(quiver: Quiver) -> bool:
    return len(component_vertex_sets(quiver)) == 1


def support_is_connected(quiver: Quiver, alpha: Sequence[int]) -> bool:
    support = [v for v, x in zip(quiver.vertices, alpha) if x]
    if not support:
        return False
    return is_connected(subquiver(quiver, support))


def support_restrict(quiver: Quiver, alpha: DimVectorLike) -> Tuple[Quiver, DimVector]:
    """
    Delete the vertices with α_v = 0 together with their incident arrows.

    The all-zero vector yields the empty quiver, which is allowed but logged.
    """
    vector = quiver.vector(alpha)
    keep = [v for v, x in zip(quiver.vertices, vector) if x]
    if not keep:
        logger.warning("Support restriction of the zero vector gives the empty quiver")
    restricted = subquiver(quiver, keep)
    return restricted, DimVector(x for x in vector if x)

