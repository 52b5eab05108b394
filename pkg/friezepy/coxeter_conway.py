# -*- coding: utf-8 -*-

"""
Coxeter-Conway frieze patterns.

A quiddity row (c_1, ..., c_n) defines the second order equation
V_{i+1} = c_i V_i - V_{i-1} and the entries

    e(i, j) = det(V_{j-1}, V_{i+1}),   e(j - 1, j) = 1,   e(j - 2, j) = 0

In a window, column j holds e(j + r, j) in row r, so row 0 is the quiddity
row and neighbouring entries satisfy

    v(r, c) v(r, c + 1) - v(r + 1, c) v(r - 1, c + 1) = 1

The frieze closes with width n - 3 exactly when the monodromy is -Id.
Arithmetic (positive integer) friezes correspond to triangulations of the
n-gon: c_i counts the triangles at vertex i.
"""

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, List, Sequence, Set, Tuple

import numpy as np
import xarray as xr

from friezepy.errors import ChartBoundaryError
from friezepy.frieze2 import make_window, read_value
from friezepy.numeric_core import MatExact, RatLike, det, mat_prod, to_rat

logger = logging.getLogger(__name__)

BOUNDARY_CLASSICAL: Tuple[int, ...] = (1, 0)  # rows -1, -2

Diagonal = Tuple[int, int]


@dataclass(frozen=True)
class ClassicalFrieze:
    """an n-periodic quiddity row (c_1, ..., c_n)"""

    n: int
    quiddity: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"a quiddity row has period at least 3, got {self.n}")
        if len(self.quiddity) != self.n:
            raise ValueError(f"{len(self.quiddity)} values for period {self.n}")
        object.__setattr__(self, "quiddity", tuple(to_rat(c) for c in self.quiddity))

    @classmethod
    def from_values(cls, values: Sequence[RatLike]) -> "ClassicalFrieze":
        return cls(len(values), tuple(values))

    def c(self, i: int) -> Fraction:
        """c_i, cyclic in i"""
        return self.quiddity[(i - 1) % self.n]

    def as_ints(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.quiddity)


def _column(q: ClassicalFrieze, j: int, depth: int) -> List[Fraction]:
    """e(j + r, j) for r = -2 .. depth - 1"""
    col = [Fraction(0), Fraction(1)]
    for r in range(depth):
        col.append(q.c(j + r) * col[-1] - col[-2])
    return col


def cc_frieze(q: ClassicalFrieze, depth: int, top: int = 0) -> xr.Dataset:
    """rows top .. depth - 1 over one period, without divisions

    Args:
        q (ClassicalFrieze): quiddity row
        depth (int): rows counted from row 0, at least 1
        top (int, optional): first stored row, -2 to include the boundary.
            Defaults to 0.
    """
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    if not -2 <= top < depth:
        raise ValueError(f"top row {top} outside -2..{depth - 1}")
    rows = list(range(top, depth))
    cols = list(range(1, q.n + 1))
    values = np.empty((len(rows), len(cols)), dtype=object)
    for b, j in enumerate(cols):
        column = _column(q, j, depth)
        for a, r in enumerate(rows):
            values[a, b] = column[r + 2]
    return make_window(
        values,
        rows,
        cols,
        q.n,
        kind="classical",
        coefficients=q.quiddity,
        closed=cc_is_closed(q),
        boundary=BOUNDARY_CLASSICAL,
    )


def cc_entry(q: ClassicalFrieze, i: int, j: int) -> Fraction:
    """e(i, j): the tridiagonal determinant with c_j .. c_i on the diagonal

    Ones fill both off-diagonals; the empty determinant (i = j - 1) is 1.
    """
    size = i - j + 1
    if size < 0:
        raise ValueError(f"i={i} is below j - 1 = {j - 1}")
    if size == 0:
        return Fraction(1)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for k in range(size):
        rows[k][k] = q.c(j + k)
        if k + 1 < size:
            rows[k][k + 1] = rows[k + 1][k] = Fraction(1)
    return det(MatExact.from_rows(rows))


def cc_solution(q: ClassicalFrieze, count: int) -> List[Tuple[Fraction, Fraction]]:
    """V_0 .. V_{count-1} started from V_0 = e_1, V_1 = e_2"""
    vectors = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    while len(vectors) < count:
        i = len(vectors) - 1
        ci = q.c(i)
        vectors.append(tuple(ci * x - y for x, y in zip(vectors[i], vectors[i - 1])))
    return vectors[:count]


def cc_entry_by_vectors(q: ClassicalFrieze, i: int, j: int) -> Fraction:
    """e(i, j) = det(V_{j-1}, V_{i+1}), for j >= 1"""
    if j < 1:
        raise ValueError("vector indices start at 0, use j >= 1")
    vectors = cc_solution(q, max(i, j) + 2)
    u, v = vectors[j - 1], vectors[i + 1]
    return u[0] * v[1] - u[1] * v[0]


def cc_monodromy(q: ClassicalFrieze) -> MatExact:
    """K(c_1) ... K(c_n) with K(c) = [[0, -1], [1, c]]"""
    return mat_prod((MatExact.from_rows([[0, -1], [1, c]]) for c in q.quiddity), 2)


def cc_is_closed(q: ClassicalFrieze) -> bool:
    """True iff the monodromy is -Id

    A monodromy +Id is reported with a warning; the row then closes only
    after twice the period with a sign change.
    """
    m = cc_monodromy(q)
    if m == MatExact.identity(2):
        row = ", ".join(str(c) for c in q.quiddity)
        warnings.warn(f"monodromy of ({row}) is +Id")
        return False
    return m == -MatExact.identity(2)


def is_arithmetic(q: ClassicalFrieze) -> bool:
    """closed with positive integer entries on rows 0 .. n - 4"""
    if not cc_is_closed(q):
        return False
    if q.n == 3:
        return all(c == 1 for c in q.quiddity)
    band = cc_frieze(q, q.n - 3)["v"].values
    return all(v > 0 and v.denominator == 1 for v in band.ravel())


def cc_verify_rule(w: xr.Dataset) -> List[Tuple[int, int]]:
    """(row, col) of the unimodular diamonds that fail in a classical window"""
    rows = [int(r) for r in w["row"].values]
    cols = [int(c) for c in w["col"].values]
    failures = []
    for r in rows[:-1]:
        for c in cols if w.attrs.get("periodic") else cols[:-1]:
            try:
                a, d = read_value(w, r, c), read_value(w, r, c + 1)
                b, up = read_value(w, r + 1, c), read_value(w, r - 1, c + 1)
            except IndexError:
                continue
            if a * d - b * up != 1:
                failures.append((r, c))
    return failures


def _crosses(d1: Diagonal, d2: Diagonal) -> bool:
    (a, b), (c, d) = sorted(d1), sorted(d2)
    return a < c < b < d or c < a < d < b


def validate_triangulation(n: int, diagonals: Sequence[Diagonal]) -> FrozenSet[Diagonal]:
    """checks n - 3 distinct noncrossing diagonals of the n-gon 1 .. n

    Raises:
        ValueError: wrong count, sides or crossings
    """
    cleaned = frozenset(tuple(sorted(d)) for d in diagonals)
    if len(cleaned) != n - 3 or len(cleaned) != len(diagonals):
        raise ValueError(f"a triangulation of the {n}-gon has {n - 3} distinct diagonals")
    for i, j in cleaned:
        if not 1 <= i < j <= n or j - i in (1, n - 1):
            raise ValueError(f"({i}, {j}) is not a diagonal of the {n}-gon")
    for d1, d2 in combinations(cleaned, 2):
        if _crosses(d1, d2):
            raise ValueError(f"diagonals {d1} and {d2} cross")
    return cleaned


def triangulation_to_quiddity(n: int, diagonals: Sequence[Diagonal]) -> ClassicalFrieze:
    """c_i = number of triangles at vertex i = 1 + diagonals at i"""
    cleaned = validate_triangulation(n, diagonals)
    counts = [1] * n
    for i, j in cleaned:
        counts[i - 1] += 1
        counts[j - 1] += 1
    return ClassicalFrieze(n, tuple(counts))


def _triangulate(vertices: Tuple[int, ...]) -> List[FrozenSet[Diagonal]]:
    if len(vertices) < 4:
        return [frozenset()]
    first, last = vertices[0], vertices[-1]
    out = []
    for k in range(1, len(vertices) - 1):
        apex = vertices[k]
        extra = set()
        if k != 1:
            extra.add((first, apex))
        if k != len(vertices) - 2:
            extra.add((apex, last))
        for left in _triangulate(vertices[: k + 1]):
            for right in _triangulate(vertices[k:]):
                out.append(frozenset(extra) | left | right)
    return out


def triangulations(n: int) -> List[FrozenSet[Diagonal]]:
    """all triangulations of the n-gon with vertices 1 .. n"""
    if n < 3:
        raise ValueError("polygons have at least 3 vertices")
    return _triangulate(tuple(range(1, n + 1)))


def quiddity_insert(q: Sequence[int], i: int) -> Tuple[int, ...]:
    """glues a triangle on the side (i, i + 1): a new 1 between them, both raised by 1"""
    q = list(q)
    size = len(q)
    i %= size
    q[i] += 1
    q[(i + 1) % size] += 1
    return tuple(q[: i + 1] + [1] + q[i + 1 :])


def _by_insertion(n: int) -> Set[Tuple[int, ...]]:
    level = {(1, 1, 1)}
    for _ in range(n - 3):
        level = {quiddity_insert(q, i) for q in level for i in range(len(q))}
    return level


def _remove_ear(q: Sequence[int], i: int) -> Tuple[int, ...]:
    """drops the 1 at position i and lowers both neighbours"""
    q = list(q)
    size = len(q)
    q[(i - 1) % size] -= 1
    q[(i + 1) % size] -= 1
    del q[i]
    return tuple(q)


def _by_search(n: int) -> Set[Tuple[int, ...]]:
    """bounded depth first search over quiddity rows with values 1 .. n - 2

    With V_0 = e_1, V_1 = e_2 the second coordinate y_m of V_m is the
    entry e(m - 1, 1) of the first diagonal, so a prefix is cut as soon as
    y_m <= 0 for m <= n - 2, y_{n-1} != 1 or y_n != 0. A complete row is
    kept when it closes and has an ear: a 1 whose removal leaves an
    arithmetic row of period n - 1.
    """
    if n == 3:
        return {(1, 1, 1)}
    smaller = _by_search(n - 1)
    found: Set[Tuple[int, ...]] = set()
    minus_id = -MatExact.identity(2)

    def extend(prefix: Tuple[int, ...], prev: int, cur: int):
        if len(prefix) == n:
            if cc_monodromy(ClassicalFrieze(n, prefix)) != minus_id:
                return
            if any(c == 1 and _remove_ear(prefix, i) in smaller for i, c in enumerate(prefix)):
                found.add(prefix)
            return
        m = len(prefix) + 2
        for c in range(1, n - 1):
            nxt = c * cur - prev
            if m <= n - 2 and nxt <= 0:
                continue
            if (m == n - 1 and nxt != 1) or (m == n and nxt != 0):
                continue
            extend(prefix + (c,), cur, nxt)

    extend((), 0, 1)
    logger.debug("search kept %d rows of period %d", len(found), n)
    return found


def _by_triangulations(n: int) -> Set[Tuple[int, ...]]:
    return {triangulation_to_quiddity(n, t).as_ints() for t in triangulations(n)}


def cc_enumerate(n: int, method: str = "insertion") -> Set[Tuple[int, ...]]:
    """all arithmetic classical friezes of period n as quiddity tuples

    Args:
        n (int): period, at least 3
        method (str): "insertion" (ears glued onto the triangle),
            "triangulations", or "search" (bounded search with ear reduction)
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    methods = {
        "insertion": _by_insertion,
        "triangulations": _by_triangulations,
        "search": _by_search,
    }
    if method not in methods:
        raise ValueError(f"unknown method {method!r}, use one of {sorted(methods)}")
    found = methods[method](n)
    logger.debug("%d classical friezes of period %d by %s", len(found), n, method)
    return found


def cc_frieze_from_column(n: int, values: Sequence[RatLike]) -> xr.Dataset:
    """completes a classical frieze from the column chart x_1 .. x_{n-3}

    Column 1 holds the values in rows 0 .. n - 4. Further columns follow
    from e(j+r+1, j+1) = (1 + e(j+r+1, j) e(j+r, j+1)) / e(j+r, j) with the
    rows -1 and n - 3 of ones. Returns the rows -1 .. n - 3.

    Raises:
        ChartBoundaryError: a division by zero
    """
    if n < 4:
        raise ValueError(f"column charts need n >= 4, got n={n}")
    width = n - 3
    values = [to_rat(v) for v in values]
    if len(values) != width:
        raise ValueError(f"a column chart of period {n} has {width} values")
    columns = [[Fraction(1)] + values + [Fraction(1)]]
    for j in range(1, n):
        prev = columns[-1]
        new = [Fraction(1)]
        for r in range(width):
            if prev[r + 1] == 0:
                raise ChartBoundaryError(
                    f"zero entry at row {r}, column {j}", position=(r, j)
                )
            new.append((1 + prev[r + 2] * new[r]) / prev[r + 1])
        new.append(Fraction(1))
        columns.append(new)
    grid = np.array(columns, dtype=object).T
    quiddity = tuple(grid[1])
    return make_window(
        grid,
        range(-1, width + 1),
        range(1, n + 1),
        n,
        kind="classical",
        coefficients=quiddity,
        closed=True,
        boundary=BOUNDARY_CLASSICAL,
    )
