"""
Exact linear algebra over QQ

Thin helpers over sympy's DomainMatrix (dense, rational domain) plus a seeded sampler of
small rationals. Every matrix handled by the lab is square n x n; vertex blocks are
embedded into the global matrix.
"""
import logging
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .models import ConstructionError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, str]
Vector = List  # list of QQ elements


def qq(value: Scalar):
    """Convert an int, Fraction, QQ element or 'p/q' string to a QQ element"""
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            numerator, denominator = text.split("/", 1)
            if int(denominator) == 0:
                raise ZeroDivisionError(f"Zero denominator in {value!r}")
            return QQ(int(numerator), int(denominator))
        return QQ(int(text))
    return QQ(int(value.numerator), int(value.denominator))


def format_scalar(value) -> str:
    """'p/q' in lowest terms, or an integer"""
    numerator, denominator = int(value.numerator), int(value.denominator)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def matrix(rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> DomainMatrix:
    """Dense DomainMatrix over QQ from nested rows"""
    entries = [[qq(x) for x in row] for row in rows]
    width = cols if cols is not None else (len(entries[0]) if entries else 0)
    return DomainMatrix(entries, (len(entries), width), QQ)


def zeros(rows: int, cols: Optional[int] = None) -> DomainMatrix:
    cols = rows if cols is None else cols
    return DomainMatrix([[QQ.zero] * cols for _ in range(rows)], (rows, cols), QQ)


def identity(n: int) -> DomainMatrix:
    return DomainMatrix([[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)], (n, n), QQ)


def unit(n: int, row: int, col: int) -> DomainMatrix:
    """Elementary matrix E_{row,col}"""
    entries = [[QQ.zero] * n for _ in range(n)]
    entries[row][col] = QQ.one
    return DomainMatrix(entries, (n, n), QQ)


def entries(mat: DomainMatrix) -> List[List]:
    return [list(row) for row in mat.to_list()]


def flatten(mat: DomainMatrix) -> Vector:
    """Row-major vectorization"""
    return [x for row in mat.to_list() for x in row]


def unflatten(values: Sequence, n: int) -> DomainMatrix:
    return DomainMatrix([list(values[i * n:(i + 1) * n]) for i in range(n)], (n, n), QQ)


def embed_block(block: Sequence[Sequence[Scalar]], n: int, row_offset: int, col_offset: int) -> DomainMatrix:
    """n x n matrix with `block` placed at (row_offset, col_offset) and zeros elsewhere"""
    rows = [[QQ.zero] * n for _ in range(n)]
    for i, row in enumerate(block):
        for j, value in enumerate(row):
            rows[row_offset + i][col_offset + j] = qq(value)
    return DomainMatrix(rows, (n, n), QQ)


def extract_block(mat: DomainMatrix, rows: range, cols: range) -> List[List]:
    full = mat.to_list()
    return [[full[i][j] for j in cols] for i in rows]


def is_zero(mat: DomainMatrix) -> bool:
    return all(x == QQ.zero for row in mat.to_list() for x in row)


def columns_matrix(columns: Sequence[Vector], height: int) -> DomainMatrix:
    """Matrix whose columns are the given vectors"""
    return DomainMatrix([[column[i] for column in columns] for i in range(height)], (height, len(columns)), QQ)


def rank(mat: DomainMatrix) -> int:
    rows, cols = mat.shape
    if rows == 0 or cols == 0:
        return 0
    return mat.rank()


def nullspace(mat: DomainMatrix) -> List[Vector]:
    """Basis (as rows) of {x : mat·x = 0}"""
    rows, cols = mat.shape
    if cols == 0:
        return []
    if rows == 0 or is_zero(mat):
        return [[QQ.one if i == j else QQ.zero for j in range(cols)] for i in range(cols)]
    return [list(row) for row in mat.nullspace().to_list()]


def linear_operator(images: Callable[[int], Vector], domain_dim: int, height: int) -> DomainMatrix:
    """Matrix of a linear map given by the images of the standard basis vectors"""
    return columns_matrix([images(k) for k in range(domain_dim)], height)


def is_invertible(mat: DomainMatrix) -> bool:
    return mat.shape[0] == mat.shape[1] and mat.det() != QQ.zero


def inverse(mat: DomainMatrix) -> DomainMatrix:
    return mat.inv()


def commutator(x: DomainMatrix, y: DomainMatrix, x_inv: DomainMatrix = None, y_inv: DomainMatrix = None) -> DomainMatrix:
    """X Y X^{-1} Y^{-1}"""
    x_inv = inverse(x) if x_inv is None else x_inv
    y_inv = inverse(y) if y_inv is None else y_inv
    return x * y * x_inv * y_inv


def combine(basis: Sequence[Vector], coefficients: Sequence) -> Vector:
    """Σ c_k · basis_k"""
    size = len(basis[0])
    total = [QQ.zero] * size
    for coefficient, vector in zip(coefficients, basis):
        for i in range(size):
            total[i] += coefficient * vector[i]
    return total


def apply(mat: DomainMatrix, vector: Vector) -> Vector:
    return [sum((a * b for a, b in zip(row, vector)), QQ.zero) for row in mat.to_list()]


class SpanBuilder:
    """
    Incrementally maintained row echelon basis of a subspace of QQ^d.

    `add` reduces a vector against the pivots found so far and keeps it when a nonzero
    remainder is left.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: List[Tuple[int, Vector]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Vector) -> Vector:
        remainder = list(vector)
        for pivot, row in self._rows:
            factor = remainder[pivot]
            if factor != QQ.zero:
                remainder = [r - factor * x for r, x in zip(remainder, row)]
        return remainder

    def add(self, vector: Vector) -> bool:
        remainder = self.reduce(vector)
        pivot = next((i for i, x in enumerate(remainder) if x != QQ.zero), None)
        if pivot is None:
            return False
        scale = remainder[pivot]
        normalized = [x / scale for x in remainder]
        # keep the basis fully reduced so `reduce` needs a single pass
        reduced_rows = []
        for other_pivot, row in self._rows:
            factor = row[pivot]
            if factor != QQ.zero:
                row = [r - factor * x for r, x in zip(row, normalized)]
            reduced_rows.append((other_pivot, row))
        reduced_rows.append((pivot, normalized))
        self._rows = reduced_rows
        return True

    def contains(self, vector: Vector) -> bool:
        return all(x == QQ.zero for x in self.reduce(vector))

    @property
    def is_full(self) -> bool:
        return len(self._rows) == self.dimension


class RationalSampler:
    """
    Seeded draws of small rationals p/q with p in [-N, N] and q in [1, N]
    """

    def __init__(self, seed: int, bound: int = 10):
        self.seed = seed
        self.bound = bound
        self._rng = np.random.default_rng(seed)

    def scalar(self, nonzero: bool = False):
        while True:
            numerator = int(self._rng.integers(-self.bound, self.bound + 1))
            denominator = int(self._rng.integers(1, self.bound + 1))
            if numerator or not nonzero:
                return QQ(numerator, denominator)

    def vector(self, size: int) -> Vector:
        return [self.scalar() for _ in range(size)]

    def block(self, rows: int, cols: int) -> List[List]:
        return [[self.scalar() for _ in range(cols)] for _ in range(rows)]

    def matrix(self, n: int) -> DomainMatrix:
        return DomainMatrix(self.block(n, n), (n, n), QQ)

    def invertible(self, n: int, attempts: int = 50) -> DomainMatrix:
        """
        Random invertible n x n matrix

        Raises:
            ConstructionError: no invertible draw in `attempts` tries
        """
        for _ in range(attempts):
            candidate = self.matrix(n)
            if is_invertible(candidate):
                return candidate
        logger.error(f"No invertible {n}x{n} draw in {attempts} attempts (seed {self.seed})")
        raise ConstructionError(f"No invertible {n}x{n} draw in {attempts} attempts (seed {self.seed})")

    def combination(self, basis: Sequence[Vector]) -> Vector:
        return combine(basis, [self.scalar() for _ in basis])

    def spawn(self, offset: int) -> "RationalSampler":
        """Independent sampler for a numbered retry"""
        return RationalSampler(self.seed + offset, self.bound)


def span_dimension(vectors: Iterable[Vector], dimension: int) -> int:
    span = SpanBuilder(dimension)
    for vector in vectors:
        span.add(vector)
    return len(span)


def block_diagonal(first: Sequence[Sequence], second: Sequence[Sequence], first_cols: int, second_cols: int) -> List[List]:
    """Nested rows of diag(first, second); column counts are explicit so empty blocks keep their shape"""
    top = [list(row) + [QQ.zero] * second_cols for row in first]
    bottom = [[QQ.zero] * first_cols + list(row) for row in second]
    return top + bottom
