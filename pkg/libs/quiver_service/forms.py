"""
Quadratic and bilinear forms on dimension vectors
"""
from typing import Sequence, Tuple

from .models import DimensionMismatchError, DimVectorLike, Quiver


def _entries(quiver: Quiver, vector: DimVectorLike, allow_negative: bool = False) -> Tuple[int, ...]:
    values = tuple(int(x) for x in vector)
    if len(values) != quiver.vertex_count:
        raise DimensionMismatchError(
            f"Vector {values} has {len(values)} entries, quiver has {quiver.vertex_count} vertices"
        )
    if not allow_negative and any(x < 0 for x in values):
        raise DimensionMismatchError(f"Dimension vector entries must be nonnegative: {values}")
    return values


def p_form(quiver: Quiver, alpha: DimVectorLike) -> int:
    """
    p(α) = 1 - α·α + Σ_{a ∈ Q_1} α_{h(a)} α_{t(a)}

    Args:
        quiver: Quiver indexing the vector
        alpha: Dimension vector

    Returns:
        Exact integer value of p
    """
    values = _entries(quiver, alpha, allow_negative=True)
    arrows = sum(values[h] * values[t] for t, h in quiver.arrow_index_pairs())
    return 1 - sum(x * x for x in values) + arrows


def sym_form(quiver: Quiver, beta: DimVectorLike, gamma: DimVectorLike) -> int:
    """
    Symmetric bilinear form (β, γ) = 2 Σ_v β_v γ_v - Σ_a (β_{t(a)} γ_{h(a)} + β_{h(a)} γ_{t(a)}).

    Polarizes p: (α, α) = 2(1 - p(α)). Accepts lattice vectors with negative entries.
    """
    b = _entries(quiver, beta, allow_negative=True)
    c = _entries(quiver, gamma, allow_negative=True)
    diagonal = 2 * sum(x * y for x, y in zip(b, c))
    off = sum(b[t] * c[h] + b[h] * c[t] for t, h in quiver.arrow_index_pairs())
    return diagonal - off



def square_sum(alpha: Sequence[int]) -> int:
    """α·α = Σ_v α_v²"""
    return sum(x * x for x in alpha)


def arrow_sum(quiver: Quiver, alpha: DimVectorLike) -> int:
    """Σ_{a ∈ Q_1} α_{h(a)} α_{t(a)}, the dimension of Rep^α_Q"""
    values = _entries(quiver, alpha)
    return sum(values[h] * values[t] for t, h in quiver.arrow_index_pairs())
