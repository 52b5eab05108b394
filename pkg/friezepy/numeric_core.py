# -*- coding: utf-8 -*-

"""
Exact rational scalars and small dense exact matrices.

Every frieze entry, coefficient and cluster variable in the package is a
:class:`fractions.Fraction`. Matrices are immutable :class:`MatExact`
values; products go through numpy object arrays, determinants and ranks
through fraction-free (Bareiss) elimination.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

Rat = Fraction
RatLike = Union[int, str, Fraction]

# Defaults
MAX_DET_SIZE: int = 64  # largest square matrix handed to det()


class DimensionError(ValueError):
    """matrix shapes do not fit the requested operation"""


def to_rat(value: RatLike) -> Fraction:
    """converts ints, Fractions and "p/q" strings to a Fraction

    Floats are refused: an exact value cannot be recovered from them.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rat(value: RatLike) -> str:
    """ "p/q" for proper fractions, plain digits for integers"""
    return str(to_rat(value))


def parse_rats(text: str) -> Tuple[Fraction, ...]:
    """parses a comma separated list such as "1,1,3/2,2" """
    items = [item for item in text.replace(" ", "").split(",") if item]
    return tuple(to_rat(item) for item in items)


@dataclass(frozen=True)
class MatExact:
    """immutable row-major matrix of Fractions"""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(to_rat(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RatLike]]) -> "MatExact":
        """builds a matrix from a list of rows"""
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        if any(len(r) != n_cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(n_rows, n_cols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, size: int) -> "MatExact":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatExact":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RatLike]]) -> "MatExact":
        """builds a matrix whose columns are the given vectors"""
        return cls.from_rows(columns).transpose()

    @classmethod
    def from_numpy(cls, array: np.ndarray) -> "MatExact":
        return cls.from_rows(array.tolist())

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        """object array view, entries stay Fractions"""
        out = np.empty((self.rows, self.cols), dtype=object)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = self[i, j]
        return out

    def transpose(self) -> "MatExact":
        return MatExact(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def scale(self, factor: RatLike) -> "MatExact":
        factor = to_rat(factor)
        return MatExact(self.rows, self.cols, tuple(factor * e for e in self.entries))

    def __neg__(self) -> "MatExact":
        return self.scale(-1)

    def __matmul__(self, other: "MatExact") -> "MatExact":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(format_rat(e) for e in self.row(i)) + "]"
            for i in range(self.rows)
        ) + "]"


def mat_mul(a: MatExact, b: MatExact) -> MatExact:
    """exact product a @ b

    Raises:
        DimensionError: inner dimensions differ
    """
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.rows == 0 or b.cols == 0 or a.cols == 0:
        return MatExact(a.rows, b.cols, (Fraction(0),) * (a.rows * b.cols))
    product = np.dot(a.to_numpy(), b.to_numpy())
    return MatExact.from_numpy(product)


def mat_prod(factors: Iterable[MatExact], size: int) -> MatExact:
    """ordered product of square matrices, identity when empty"""
    return reduce(mat_mul, factors, MatExact.identity(size))


def _bareiss_det(rows: List[List[Fraction]]) -> Fraction:
    size = len(rows)
    if size == 0:
        return Fraction(1)
    m = [r[:] for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def det(m: MatExact) -> Fraction:
    """exact determinant by fraction-free Gaussian elimination

    Args:
        m (MatExact): square matrix, at most MAX_DET_SIZE rows

    Returns:
        Fraction: the determinant

    Raises:
        DimensionError: m is not square or is too large
    """
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows > MAX_DET_SIZE:
        raise DimensionError(f"{m.rows}x{m.rows} exceeds MAX_DET_SIZE={MAX_DET_SIZE}")
    return _bareiss_det(m.to_lists())


def det3(u: Sequence[RatLike], v: Sequence[RatLike], w: Sequence[RatLike]) -> Fraction:
    """determinant of the 3x3 matrix with columns u, v, w"""
    u, v, w = [tuple(to_rat(x) for x in vec) for vec in (u, v, w)]
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
    )


def rank(m: MatExact) -> int:
    """exact rank over the rationals (fraction-free row echelon form)"""
    a = m.to_lists()
    n_rows, n_cols = m.rows, m.cols
    row = 0
    prev = Fraction(1)
    for col in range(n_cols):
        if row == n_rows:
            break
        pivot = next((i for i in range(row, n_rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        for i in range(row + 1, n_rows):
            for j in range(col + 1, n_cols):
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev
            a[i][col] = Fraction(0)
        prev = a[row][col]
        row += 1
    return row


def mat_vec(m: MatExact, vector: Sequence[RatLike]) -> Tuple[Fraction, ...]:
    """m applied to a column vector"""
    column = MatExact(len(vector), 1, tuple(vector))
    return mat_mul(m, column).entries
