# -*- coding: utf-8 -*-

"""
2-frieze patterns generated by a coefficient row.

Entries v_{i,j} live on integer and half-integer indices. We store them on
the doubled lattice (p, q) = (2i, 2j) and lay them out on a grid with

    row r = i - j,   column c = i + j,   so (p, q) = (c + r, c - r).

Row -1 is all ones, rows -2 and -3 are all zeros, and row 0 is the
coefficient row itself: column FIRST_COLUMN holds b_1, the next column a_1,
and so on. Every entry satisfies the diamond rule

    v(r, c) = v(r, c - 1) v(r, c + 1) - v(r - 1, c) v(r + 1, c)

Windows are xarray Datasets with a single object variable ``v`` holding
Fractions (None where an entry is undefined), dims ``row``/``col`` and
the doubled indices as 2-D coordinates ``p``/``q``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import xarray as xr

from friezepy.errors import NotClosedError
from friezepy.numeric_core import MatExact, RatLike, det, to_rat

logger = logging.getLogger(__name__)

# Defaults
FIRST_COLUMN: int = 1  # column of b_1 in every window
BOUNDARY_2FRIEZE: Tuple[int, ...] = (1, 0, 0)  # rows -1, -2, -3


@dataclass(frozen=True)
class DoubledIndex:
    """the point (i, j) = (p/2, q/2) of the frieze lattice"""

    p: int
    q: int

    def __post_init__(self):
        if (self.p - self.q) % 2:
            raise ValueError(f"p={self.p} and q={self.q} must have the same parity")

    @classmethod
    def from_grid(cls, row: int, col: int) -> "DoubledIndex":
        return cls(col + row, col - row)

    @classmethod
    def from_half_integers(cls, i: RatLike, j: RatLike) -> "DoubledIndex":
        p, q = 2 * to_rat(i), 2 * to_rat(j)
        if p.denominator != 1 or q.denominator != 1:
            raise ValueError(f"({i}, {j}) are not half-integers")
        return cls(int(p), int(q))

    @property
    def row(self) -> int:
        return (self.p - self.q) // 2

    @property
    def col(self) -> int:
        return (self.p + self.q) // 2

    @property
    def is_integer(self) -> bool:
        """True on the grid of integer indices"""
        return self.p % 2 == 0


@dataclass(frozen=True)
class CoefficientRow:
    """the first nontrivial row (b_1, a_1, ..., b_n, a_n), read cyclically"""

    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"period n={self.n} must be at least 4")
        if len(self.values) != 2 * self.n:
            raise ValueError(
                f"a coefficient row of period {self.n} needs {2 * self.n} values,"
                f" got {len(self.values)}"
            )
        object.__setattr__(self, "values", tuple(to_rat(v) for v in self.values))

    @classmethod
    def from_values(cls, values: Sequence[RatLike]) -> "CoefficientRow":
        """period is read from the length"""
        if len(values) % 2:
            raise ValueError("a coefficient row has an even number of values")
        return cls(len(values) // 2, tuple(values))

    @classmethod
    def from_ab(cls, a: Sequence[RatLike], b: Sequence[RatLike]) -> "CoefficientRow":
        """interleaves b_i, a_i"""
        if len(a) != len(b):
            raise ValueError("a and b must have the same length")
        return cls(len(a), tuple(x for pair in zip(b, a) for x in pair))

    def a(self, i: int) -> Fraction:
        """a_i, cyclic in i"""
        return self.values[(2 * i - 1) % (2 * self.n)]

    def b(self, i: int) -> Fraction:
        """b_i, cyclic in i"""
        return self.values[(2 * i - 2) % (2 * self.n)]

    def w(self, col: int) -> Fraction:
        """row 0 entry at a window column"""
        return self.values[(col - FIRST_COLUMN) % (2 * self.n)]

    def rotated(self, k: int) -> "CoefficientRow":
        """row read from index k on; even k keeps the (b, a) pairing"""
        k %= 2 * self.n
        return CoefficientRow(self.n, self.values[k:] + self.values[:k])

    def reversed(self) -> "CoefficientRow":
        """the mirror image of the frieze"""
        return CoefficientRow(self.n, self.values[::-1])

    def as_ints(self) -> Tuple[int, ...]:
        if not self.is_integral:
            raise ValueError("coefficient row is not integral")
        return tuple(int(v) for v in self.values)

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    @property
    def is_positive(self) -> bool:
        return all(v > 0 for v in self.values)


def _diagonal(coeffs: CoefficientRow, q: int, depth: int) -> List[Fraction]:
    """rows -3 .. depth - 1 of the diagonal with fixed doubled index q"""
    diag = [Fraction(0), Fraction(0), Fraction(1)]
    for r in range(depth):
        p = q + 2 * r
        diag.append(coeffs.w(p) * diag[-1] - coeffs.w(p - 1) * diag[-2] + diag[-3])
    return diag


def _grid(
    coeffs: CoefficientRow, rows: Iterable[int], cols: Iterable[int]
) -> Dict[Tuple[int, int], Fraction]:
    """entries on an arbitrary set of rows (>= -3) and columns, no wrapping"""
    rows, cols = list(rows), list(cols)
    depth = max(rows) + 1
    cache: Dict[int, List[Fraction]] = {}
    out = {}
    for c in cols:
        for r in rows:
            q = c - r
            if q not in cache:
                cache[q] = _diagonal(coeffs, q, depth)
            out[(r, c)] = cache[q][r + 3]
    return out


def make_window(
    values: np.ndarray,
    rows: Sequence[int],
    cols: Sequence[int],
    n: int,
    kind: str = "2frieze",
    coefficients: Optional[Sequence[RatLike]] = None,
    closed: bool = False,
    periodic: bool = True,
    boundary: Sequence[int] = BOUNDARY_2FRIEZE,
) -> xr.Dataset:
    """wraps a 2-D object array of entries into a window Dataset

    Args:
        values (np.ndarray): entries, shape (len(rows), len(cols))
        rows, cols: integer grid labels
        n (int): period of the pattern
        kind (str): "2frieze", "classical" or "infinite"
        coefficients: the generating row, if there is one
        closed (bool): reads beyond the stored rows may use periodicity
        periodic (bool): column reads wrap around the stored columns
        boundary: constant values of rows -1, -2, ... above the window

    Returns:
        xr.Dataset: window with variable ``v``
    """
    rows = np.asarray(rows, dtype=int)
    cols = np.asarray(cols, dtype=int)
    grid_c, grid_r = np.meshgrid(cols, rows)
    ds = xr.Dataset(
        {"v": (("row", "col"), np.asarray(values, dtype=object))},
        coords={"row": rows, "col": cols},
    )
    if kind != "classical":
        ds = ds.assign_coords(p=(("row", "col"), grid_c + grid_r))
        ds = ds.assign_coords(q=(("row", "col"), grid_c - grid_r))
    ds.attrs["kind"] = kind
    ds.attrs["n"] = int(n)
    ds.attrs["closed"] = bool(closed)
    ds.attrs["periodic"] = bool(periodic)
    ds.attrs["period"] = len(cols)
    ds.attrs["boundary"] = tuple(int(b) for b in boundary)
    ds.attrs["coefficients"] = (
        None if coefficients is None else tuple(str(to_rat(v)) for v in coefficients)
    )
    return ds


def frieze_from_coefficients(
    coeffs: CoefficientRow, depth: int, top: int = 0
) -> xr.Dataset:
    """window of rows top .. depth - 1 over one period of 2n columns

    Every diagonal is propagated with the division free recurrence

        v(p) = w(p) v(p - 2) - w(p - 1) v(p - 4) + v(p - 6)

    started from the boundary values 0, 0, 1, where w is the coefficient
    row. Integer coefficients therefore give integer entries.

    Args:
        coeffs (CoefficientRow): generating row
        depth (int): number of rows counted from row 0, at least 1
        top (int, optional): first stored row, -3 to include the boundary.
            Defaults to 0.

    Returns:
        xr.Dataset: the window
    """
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    if not -3 <= top < depth:
        raise ValueError(f"top row {top} outside -3..{depth - 1}")
    rows = list(range(top, depth))
    cols = list(range(FIRST_COLUMN, FIRST_COLUMN + 2 * coeffs.n))
    grid = _grid(coeffs, rows, cols)
    values = np.empty((len(rows), len(cols)), dtype=object)
    for a, r in enumerate(rows):
        for b, c in enumerate(cols):
            values[a, b] = grid[(r, c)]
    logger.debug("computed rows %d..%d of a period %d frieze", top, depth - 1, coeffs.n)
    return make_window(
        values,
        rows,
        cols,
        coeffs.n,
        coefficients=coeffs.values,
        closed=closes_at_width(coeffs),
    )


def closed_band(coeffs: CoefficientRow) -> xr.Dataset:
    """rows -1 .. n - 4: the band between the two rows of ones"""
    return frieze_from_coefficients(coeffs, coeffs.n - 3, top=-1)


def closes_at_width(coeffs: CoefficientRow) -> bool:
    """True if row n - 4 is all ones and rows n - 3, n - 2 all zeros"""
    n = coeffs.n
    cols = range(FIRST_COLUMN, FIRST_COLUMN + 2 * n)
    grid = _grid(coeffs, [n - 4, n - 3, n - 2], cols)
    return all(
        grid[(n - 4, c)] == 1 and grid[(n - 3, c)] == 0 and grid[(n - 2, c)] == 0
        for c in cols
    )


def read_value(ds: xr.Dataset, row: int, col: int) -> Optional[Fraction]:
    """reads one entry of a window

    Columns wrap for periodic windows. Rows above the window that belong to
    the constant boundary are filled in; other rows outside the stored
    range are reduced by the diagonal periodicity v(r, c) = v(r - n, c - n)
    when the window is a closed 2-frieze.

    Raises:
        IndexError: the entry cannot be recovered from the window
    """
    rows = ds["row"].values
    cols = ds["col"].values
    first_col = int(cols[0])
    if ds.attrs.get("periodic", False):
        col = first_col + (col - first_col) % int(ds.attrs["period"])
    elif not first_col <= col <= int(cols[-1]):
        raise IndexError(f"column {col} outside the window")
    if int(rows[0]) <= row <= int(rows[-1]):
        return ds["v"].values[row - int(rows[0]), col - first_col]
    boundary = ds.attrs.get("boundary", ())
    if -len(boundary) <= row <= -1:
        return Fraction(boundary[-row - 1])
    if ds.attrs.get("kind") == "2frieze" and ds.attrs.get("closed", False):
        n = int(ds.attrs["n"])
        low = known_top_row(ds)
        if int(rows[-1]) - low + 1 >= n:
            reduced = low + (row - low) % n
            return read_value(ds, reduced, col - (row - reduced))
    raise IndexError(f"row {row} outside the window")


def known_top_row(ds: xr.Dataset) -> int:
    """first row of the contiguous block of stored and boundary rows"""
    top = int(ds["row"].values[0])
    boundary = len(ds.attrs.get("boundary", ()))
    return min(top, -boundary) if top <= 0 else top


def entry_by_determinant(coeffs: CoefficientRow, i: RatLike, j: RatLike) -> Fraction:
    """v_{i,j} as a determinant in the coefficients

    The matrix has size m = i - j + 1: the coefficients w(q), w(q + 2), ...
    on the diagonal, w(q + 1), w(q + 3), ... just above it, ones on the
    second superdiagonal and on the subdiagonal. On the integer grid the
    diagonal carries the a's, on the half-integer grid the b's.

    Args:
        coeffs (CoefficientRow): generating row
        i, j: half-integers with i - j integral and i >= j - 1

    Returns:
        Fraction: v_{i,j}, 1 when i = j - 1
    """
    index = DoubledIndex.from_half_integers(i, j)
    size = index.row + 1
    if size < 0:
        raise ValueError(f"i={i} is below j - 1 = {to_rat(j) - 1}")
    if size == 0:
        return Fraction(1)
    q = index.q
    rows = [[Fraction(0)] * size for _ in range(size)]
    for k in range(size):
        rows[k][k] = coeffs.w(q + 2 * k)
        if k + 1 < size:
            rows[k][k + 1] = coeffs.w(q + 2 * k + 1)
            rows[k + 1][k] = Fraction(1)
        if k + 2 < size:
            rows[k][k + 2] = Fraction(1)
    return det(MatExact.from_rows(rows))


def _diamonds(ds: xr.Dataset) -> Iterable[Tuple[int, int]]:
    rows = [int(r) for r in ds["row"].values]
    cols = [int(c) for c in ds["col"].values]
    wrap = ds.attrs.get("periodic", False)
    for r in rows[1:-1]:
        for c in cols if wrap else cols[1:-1]:
            yield r, c


def verify_pattern_rule(w: xr.Dataset) -> List[DoubledIndex]:
    """centres of the diamonds breaking v = west * east - north * south

    Only diamonds with all five entries stored (and not None) are checked;
    columns wrap on periodic windows.
    """
    violations = []
    for r, c in _diamonds(w):
        cells = [
            read_value(w, r, c),
            read_value(w, r, c - 1),
            read_value(w, r, c + 1),
            read_value(w, r - 1, c),
            read_value(w, r + 1, c),
        ]
        if any(x is None for x in cells):
            continue
        centre, west, east, north, south = cells
        if centre != west * east - north * south:
            violations.append(DoubledIndex.from_grid(r, c))
    if violations:
        logger.debug("%d diamond violations", len(violations))
    return violations


@dataclass(frozen=True)
class SymmetryReport:
    """outcome of the three symmetries of a closed frieze"""

    row_periodic: bool
    diagonal_periodic: bool
    glide: bool

    @property
    def all_pass(self) -> bool:
        return self.row_periodic and self.diagonal_periodic and self.glide


def verify_closed_symmetries(coeffs: CoefficientRow) -> SymmetryReport:
    """checks the symmetries a closed frieze must have

    (i) every row is 2n-periodic, (ii) v(r + n, c + n) = v(r, c) along the
    diagonals, (iii) the glide (r, c) -> (n - 5 - r, c + n) maps the band
    of interior rows 0 .. n - 5 onto itself.

    Raises:
        NotClosedError: coeffs does not close at width n - 4
    """
    if not closes_at_width(coeffs):
        raise NotClosedError(f"the period {coeffs.n} row does not give a closed frieze")
    n = coeffs.n
    rows = range(-3, 2 * n)
    cols = range(FIRST_COLUMN, FIRST_COLUMN + 6 * n)
    grid = _grid(coeffs, rows, cols)
    row_periodic = all(
        grid[(r, c)] == grid[(r, c + 2 * n)]
        for r in rows
        for c in range(FIRST_COLUMN, FIRST_COLUMN + 4 * n)
    )
    diagonal_periodic = all(
        grid[(r + n, c + n)] == grid[(r, c)]
        for r in range(-3, n)
        for c in range(FIRST_COLUMN, FIRST_COLUMN + 4 * n)
    )
    glide = all(
        grid[(n - 5 - r, c + n)] == grid[(r, c)]
        for r in range(0, n - 4)
        for c in range(FIRST_COLUMN, FIRST_COLUMN + 2 * n)
    )
    return SymmetryReport(row_periodic, diagonal_periodic, glide)


@dataclass(frozen=True)
class Sl3Report:
    """the two interleaved subgrids and the 3x3 minors that are not one

    Grids map a DoubledIndex to its entry; a failure is recorded as the
    (row, col) of the top-left corner of the minor.
    """

    integer_grid: Dict[DoubledIndex, Fraction]
    half_grid: Dict[DoubledIndex, Fraction]
    failures: Tuple[Tuple[int, int], ...]

    @property
    def all_unit(self) -> bool:
        return not self.failures


def sl3_subgrids(w: xr.Dataset) -> Sl3Report:
    """checks that both subgrids of a 2-frieze window are SL3-tilings

    The minor with offset d at column c has entries
    M[a][b] = v(d + a - b, c + a + b); it sits on the integer subgrid when
    c + d is even. Offsets run from -1 (touching the zero rows) to the
    last stored row minus two.

    Raises:
        ValueError: fewer than two rows below the boundary
    """
    rows = [int(r) for r in w["row"].values]
    cols = [int(c) for c in w["col"].values]
    last = rows[-1]
    if last < 1:
        raise ValueError("an SL3 check needs stored rows 0 and 1")
    first = max(-1, known_top_row(w) + 2)
    wrap = w.attrs.get("periodic", False)
    starts = cols if wrap else cols[: max(0, len(cols) - 4)]
    integer_grid: Dict[DoubledIndex, Fraction] = {}
    half_grid: Dict[DoubledIndex, Fraction] = {}
    for r in rows:
        for c in cols:
            index = DoubledIndex.from_grid(r, c)
            target = integer_grid if index.is_integer else half_grid
            target[index] = read_value(w, r, c)
    failures = []
    for d in range(first, last - 1):
        for c in starts:
            minor = [
                [read_value(w, d + a - b, c + a + b) for b in range(3)] for a in range(3)
            ]
            if any(x is None for row in minor for x in row):
                continue
            if det(MatExact.from_rows(minor)) != 1:
                failures.append((d, c))
    return Sl3Report(integer_grid, half_grid, tuple(failures))


def count_distinct_entries(coeffs: CoefficientRow) -> int:
    """number of interior positions modulo row periodicity and glide

    Raises:
        NotClosedError: coeffs does not close at width n - 4
    """
    if not closes_at_width(coeffs):
        raise NotClosedError(f"the period {coeffs.n} row does not give a closed frieze")
    n = coeffs.n
    orbits = set()
    for r in range(n - 4):
        for c in range(2 * n):
            image = (n - 5 - r, (c + n) % (2 * n))
            orbits.add(min((r, c), image))
    return len(orbits)
