# -*- coding: utf-8 -*-

"""
Arithmetic 2-friezes: closed friezes of positive integers.

Contains the bounded search for all arithmetic friezes of a given period,
their classification up to rotation and reflection, the two constructions
that produce new arithmetic friezes from old ones (one-point stabilization
and connected sum) and the growth of infinite friezes from a boundary of
ones.

Coefficient tuples are plain tuples of ints (b_1, a_1, ..., b_n, a_n).
"""

import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
import xarray as xr

from friezepy.cluster import Move
from friezepy.diffeq_polygon import (
    Polygon3,
    companion_matrix,
    is_closed,
    is_convex,
    solve_polygon,
)
from friezepy.errors import FriezeError, NotArithmeticError, NotClosedError
from friezepy.frieze2 import CoefficientRow, closed_band, make_window
from friezepy.io import frieze_from_json
from friezepy.numeric_core import MatExact, mat_prod

try:
    from importlib.resources import files
except ImportError:
    from importlib_resources import files  # type: ignore

logger = logging.getLogger(__name__)

# Defaults
DEFAULT_BOUND: int = 8  # cap on the double column values of the search
KNOWN_BOUND: Dict[int, int] = {4: 1, 5: 3, 6: 6, 7: 12}  # chart bound reaching every known frieze
KNOWN_COUNTS: Dict[int, int] = {4: 1, 5: 5, 6: 51, 7: 868}

STAIRCASE: Tuple[Move, ...] = (Move.RIGHT,)
DOUBLE_COLUMN: Tuple[Move, ...] = (Move.STRAIGHT,)
TRUE_ZIGZAG: Tuple[Move, ...] = (Move.RIGHT, Move.LEFT)
UNIT_FRIEZE: Tuple[int, ...] = (1,) * 8  # the n = 4 frieze, the summand of stabilize

Tuple2n = Tuple[int, ...]


@dataclass(frozen=True)
class ArithFrieze:
    """a closed 2-frieze whose entries are all positive integers"""

    coeffs: CoefficientRow

    def __post_init__(self):
        if not is_closed(self.coeffs):
            raise NotClosedError("an arithmetic frieze is closed")
        band = closed_band(self.coeffs)["v"].values
        if not all(v > 0 and v.denominator == 1 for v in band.ravel()):
            raise NotArithmeticError("an arithmetic frieze has positive integer entries")

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "ArithFrieze":
        return cls(CoefficientRow.from_values(values))

    @property
    def n(self) -> int:
        return self.coeffs.n

    @property
    def width(self) -> int:
        return self.coeffs.n - 4

    def as_tuple(self) -> Tuple2n:
        return self.coeffs.as_ints()


@dataclass(frozen=True)
class SearchConfig:
    """period, cap B on the double column values and worker count"""

    n: int
    value_bound: int = DEFAULT_BOUND
    parallel_width: int = 1

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"arithmetic friezes need n >= 4, got n={self.n}")
        if self.value_bound < 1:
            raise ValueError("the value bound B must be at least 1")
        if self.parallel_width < 1:
            raise ValueError("at least one worker is needed")


def rotations(t: Sequence[int]) -> List[Tuple2n]:
    """all cyclic shifts of a first row, by single entries"""
    t = tuple(t)
    return [t[k:] + t[:k] for k in range(len(t))]


def canonical(t: Sequence[int]) -> Tuple2n:
    """lexicographically smallest shift by two, i.e. by whole (b, a) pairs"""
    t = tuple(t)
    return min(t[k:] + t[:k] for k in range(0, len(t), 2))


def dihedral_key(t: Sequence[int]) -> Tuple2n:
    """smallest tuple over rotations and reflection"""
    t = tuple(t)
    return min(rotations(t) + rotations(t[::-1]))


class _ChartSearch(object):
    """depth first search over the double column at columns 0 and 1

    Row r of the chart holds L_r at column 0 and R_r at column 1. When row
    r is assigned, the entries (r - d, 1 + d) to the right and (r - d, -d)
    to the left become computable; the right ones involve R_r as the only
    new unknown and the left ones only L_r, so both candidate lists are
    filtered on their own before taking the product.
    """

    def __init__(self, n: int, bound: int):
        self.n = n
        self.bound = bound
        self.width = n - 4
        self.found: Set[Tuple2n] = set()
        self.leaves = 0

    def value(self, grid: Dict[Tuple[int, int], int], r: int, c: int) -> int:
        if r == -1 or r == self.width:
            return 1
        return grid[(r, c)]

    def _cone(self, grid, r: int, chart_col: int, candidate: int):
        """entries unlocked by one new chart value, None if not integral"""
        trial = dict(grid)
        trial[(r, chart_col)] = candidate
        new = {(r, chart_col): candidate}
        for d in range(1, r + 1):
            row = r - d
            if chart_col == 1:
                col, src, far = 1 + d, d, d - 1
            else:
                col, src, far = -d, 1 - d, 2 - d
            numerator = self.value(trial, row, src) + self.value(
                trial, row - 1, src
            ) * self.value(trial, row + 1, src)
            quotient, remainder = divmod(numerator, self.value(trial, row, far))
            if remainder:
                return None
            trial[(row, col)] = quotient
            new[(row, col)] = quotient
        return new

    def candidates(self, grid, r: int, chart_col: int):
        out = []
        for candidate in range(1, self.bound + 1):
            cone = self._cone(grid, r, chart_col, candidate)
            if cone is not None:
                out.append(cone)
        return out

    def search(self, grid: Dict[Tuple[int, int], int], r: int):
        if r == self.width:
            self.leaf(grid)
            return
        rights = self.candidates(grid, r, 1)
        if not rights:
            return
        lefts = self.candidates(grid, r, 0)
        for left, right in product(lefts, rights):
            self.search({**grid, **left, **right}, r + 1)

    def leaf(self, grid: Dict[Tuple[int, int], int]):
        """sweeps the chart over a full period and records the first row"""
        self.leaves += 1
        span = 2 * self.n
        columns = [[grid[(r, 0)] for r in range(self.width)], [grid[(r, 1)] for r in range(self.width)]]
        for c in range(1, span + 1):
            prev, cur = columns[c - 1], columns[c]
            nxt = []
            for r in range(self.width):
                above = 1 if r == 0 else cur[r - 1]
                below = 1 if r == self.width - 1 else cur[r + 1]
                quotient, remainder = divmod(cur[r] + above * below, prev[r])
                if remainder:
                    return
                nxt.append(quotient)
            columns.append(nxt)
        if columns[span] != columns[0] or columns[span + 1] != columns[1]:
            return
        first_row = tuple(columns[c][0] for c in range(1, span + 1))
        self.found.update(rotations(first_row))


def _search_branch(args: Tuple[int, int, Optional[Tuple[int, int]]]) -> Set[Tuple2n]:
    """runs the search below a fixed first chart row (or from scratch)"""
    n, bound, first = args
    search = _ChartSearch(n, bound)
    if first is None:
        search.search({}, 0)
    else:
        left = search._cone({}, 0, 0, first[0])
        right = search._cone({}, 0, 1, first[1])
        search.search({**left, **right}, 1)
    return search.found


def enumerate_friezes(cfg: SearchConfig) -> Set[Tuple2n]:
    """all arithmetic friezes of period n with a double column bounded by B

    Returns distinct first-row tuples: rotations and reflections that
    change the tuple are counted separately. The result is complete only
    up to the bound.
    """
    n, bound = cfg.n, cfg.value_bound
    if n == 4:
        return {(1,) * 8}
    if bound < KNOWN_BOUND.get(n, 0):
        warnings.warn(
            f"bound {bound} is below {KNOWN_BOUND[n]}, which finds all"
            f" {KNOWN_COUNTS[n]} known friezes for n={n}; the result may be incomplete"
        )
    logger.info("searching period %d friezes with chart values <= %d", n, bound)
    if cfg.parallel_width == 1:
        found = _search_branch((n, bound, None))
    else:
        tasks = [(n, bound, pair) for pair in product(range(1, bound + 1), repeat=2)]
        found = set()
        with ProcessPoolExecutor(max_workers=cfg.parallel_width) as pool:
            for part in pool.map(_search_branch, tasks, chunksize=max(1, len(tasks) // (4 * cfg.parallel_width))):
                found |= part
    logger.info("found %d tuples for n=%d, %s known", len(found), n, KNOWN_COUNTS.get(n, "none"))
    return found


@dataclass(frozen=True)
class Orbit:
    """a class of first rows under rotation and reflection"""

    representative: Tuple2n
    size: int
    members: Tuple[Tuple2n, ...]


def dihedral_orbits(friezes: Iterable[Sequence[int]]) -> List[Orbit]:
    """groups first rows under cyclic shift and reversal, smallest orbits first"""
    classes: Dict[Tuple2n, List[Tuple2n]] = {}
    for t in set(tuple(t) for t in friezes):
        classes.setdefault(dihedral_key(t), []).append(t)
    orbits = [Orbit(key, len(members), tuple(sorted(members))) for key, members in classes.items()]
    return sorted(orbits, key=lambda o: (o.size, o.representative))


def named_pattern(label: str) -> CoefficientRow:
    """one of the stored patterns, e.g. "12" or "octagon" """
    text = (files("friezepy") / "data" / f"pattern{label}.json").read_text()
    return frieze_from_json(text)


def has_consecutive_ones(f: ArithFrieze) -> bool:
    """True when the first row has two neighbouring ones, cyclically

    For width at least one these are exactly the stabilizations.
    """
    t = f.as_tuple()
    return any(t[k] == 1 and t[(k + 1) % len(t)] == 1 for k in range(len(t)))


def _cut(values: Sequence[int], cut: int) -> List[int]:
    """the row read so that the entry at index cut comes fourth"""
    size = len(values)
    return [values[(cut - 3 + j) % size] for j in range(size)]


def _splice(u: Sequence[int], g: Sequence[int]) -> List[int]:
    """the connected sum of two rows already cut"""
    k2 = len(g)
    return (
        [u[0] + g[0], u[1] + g[1] + u[2] * g[0], u[2] + g[2]]
        + list(g[3 : k2 - 3])
        + [u[3] + g[k2 - 3], u[4] + g[k2 - 2] + u[3] * g[k2 - 1], u[5] + g[k2 - 1]]
        + list(u[6:])
    )


def gluing_monodromy(f: ArithFrieze, g: ArithFrieze, cut_f: int, cut_g: int) -> MatExact:
    """product of the first k companion matrices of the connected sum

    For the sum of a period n and a period k frieze this maps the basis
    V_{n-2}, V_{n-1}, V_n of the polygon of the cut f to V_1, V_2, V_3.
    """
    out = _splice(_cut(f.as_tuple(), cut_f), _cut(g.as_tuple(), cut_g))
    return mat_prod((companion_matrix(out[2 * j + 1], out[2 * j]) for j in range(g.n)), 3)


def _gluing_target(f: ArithFrieze, cut_f: int) -> MatExact:
    poly = solve_polygon(CoefficientRow.from_values(_cut(f.as_tuple(), cut_f)))
    return MatExact.from_columns([poly.vertex(1), poly.vertex(2), poly.vertex(3)])


def connected_sum(
    f: ArithFrieze, g: ArithFrieze, cut_f: int, cut_g: int, verify: bool = True
) -> ArithFrieze:
    """glues g into f, giving a frieze of period n + k - 3

    Both rows are rotated by :func:`_cut` so that they read
    (u_0, u_1, ...) and (u'_0, u'_1, ...). The interior entries
    u'_3 .. u'_{2k-4} are inserted and the three neighbours on each side
    of the cut are rewritten.

    Args:
        f, g: arithmetic friezes of periods n and k
        cut_f, cut_g: index of the entry that becomes u_3, resp. u'_3
        verify (bool): also check that the partial monodromy of the sum
            glues the two polygons

    Returns:
        ArithFrieze: period n + k - 3
    """
    out = _splice(_cut(f.as_tuple(), cut_f), _cut(g.as_tuple(), cut_g))
    if verify and gluing_monodromy(f, g, cut_f, cut_g) != _gluing_target(f, cut_f):
        raise FriezeError("the connected sum does not glue the two polygons")
    logger.debug("connected sum of periods %d and %d", f.n, g.n)
    return ArithFrieze.from_values(out)


def stabilize(f: ArithFrieze, cut: int) -> ArithFrieze:
    """inserts one vertex into the polygon: the sum with the all-ones n = 4 frieze

    The row b_1, a_1, b_2, a_2, b_3, a_3, ... (a_2 at index cut) becomes
    b_1 + 1, a_1 + b_2 + 1, b_2 + 1, 1, 1, a_2 + 1, b_3 + a_2 + 1, a_3 + 1, ...
    """
    u = _cut(f.as_tuple(), cut)
    b1, a1, b2, a2, b3, a3 = u[:6]
    out = [b1 + 1, a1 + b2 + 1, b2 + 1, 1, 1, a2 + 1, b3 + a2 + 1, a3 + 1] + u[6:]
    if not is_convex(stabilized_polygon(f, cut)):
        raise FriezeError("the stabilized polygon is not convex")
    logger.debug("stabilized period %d at %d", f.n, cut)
    return ArithFrieze.from_values(out)


def stabilization_vertex(f: ArithFrieze, cut: int):
    """the vertex W added after V_n, and U = a_2 V_1 - V_2 = b_2 V_n - V_{n-1}

    W = (b_2 + a_1 + 1) V_n - (b_1 + 1) V_{n-1} + V_{n-2} = U + V_n + V_1
    for the polygon of f read from the cut.
    """
    u = _cut(f.as_tuple(), cut)
    poly = solve_polygon(CoefficientRow.from_values(u))
    b1, a1, b2, a2 = u[0], u[1], u[2], u[3]
    n = f.n
    vn, vn1, vn2 = poly.vertex(n), poly.vertex(n - 1), poly.vertex(n - 2)
    w = tuple((b2 + a1 + 1) * x - (b1 + 1) * y + z for x, y, z in zip(vn, vn1, vn2))
    aux = tuple(a2 * x - y for x, y in zip(poly.vertex(1), poly.vertex(2)))
    return w, aux


def stabilized_polygon(f: ArithFrieze, cut: int) -> Polygon3:
    """V_1 .. V_n of the cut f followed by the inserted vertex"""
    poly = solve_polygon(CoefficientRow.from_values(_cut(f.as_tuple(), cut)))
    vertex, _ = stabilization_vertex(f, cut)
    return Polygon3(f.n + 1, poly.vertices + (vertex,))


def grow_from_unit_zigzag(shape: Sequence[Move], rows: int, cols: int) -> xr.Dataset:
    """an infinite frieze below a row of ones and right of a zig-zag of ones

    Row r has ones at columns c_r and c_r + 1, with c_0 = 0 and
    c_{r+1} = c_r + shape[r mod len(shape)]. Entries further right follow
    from v(r, c) = (v(r, c - 1) + v(r - 1, c - 1) v(r + 1, c - 1)) / v(r, c - 2);
    entries left of the zig-zag are None.

    Args:
        shape: the repeated moves, e.g. STAIRCASE, DOUBLE_COLUMN, TRUE_ZIGZAG
        rows, cols (int): window size, columns counted from 0

    Returns:
        xr.Dataset: rows 0 .. rows - 1, columns 0 .. cols - 1
    """
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be at least 1")
    shape = tuple(Move(m) for m in shape)
    if not shape:
        raise ValueError("empty zig-zag shape")

    @lru_cache(maxsize=None)
    def start(r: int) -> int:
        return 0 if r == 0 else start(r - 1) + int(shape[(r - 1) % len(shape)])

    @lru_cache(maxsize=None)
    def entry(r: int, c: int) -> Optional[Fraction]:
        if r == -1:
            return Fraction(1)
        c0 = start(r)
        if c < c0:
            return None
        if c <= c0 + 1:
            return Fraction(1)
        return (entry(r, c - 1) + entry(r - 1, c - 1) * entry(r + 1, c - 1)) / entry(r, c - 2)

    values = np.empty((rows, cols), dtype=object)
    for c in range(cols):
        for r in range(rows):
            values[r, c] = entry(r, c)
    return make_window(
        values, range(rows), range(cols), 0, kind="infinite", periodic=False, boundary=(1,)
    )
