# -*- coding: utf-8 -*-

"""
Quivers, seeds and mutations, and the cluster charts of a closed 2-frieze.

A quiver is stored as its skew-symmetric exchange matrix B, with
B[i, j] > 0 counting arrows i -> j. Seeds carry rational values, never
symbolic Laurent polynomials.

The frieze quiver of period n is a 2 x (n - 4) grid. Vertex x_k has index
k - 1, vertex y_k has index n - 4 + k - 1. In a window, row r of a chart
holds two adjacent entries; the one with column + row even is the x value
of that row, the other one the y value.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import xarray as xr

from friezepy.errors import ChartBoundaryError
from friezepy.frieze2 import (
    FIRST_COLUMN,
    CoefficientRow,
    DoubledIndex,
    make_window,
    read_value,
)
from friezepy.numeric_core import MatExact, RatLike, rank, to_rat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Quiver:
    """a quiver without loops and 2-cycles given by its exchange matrix"""

    size: int
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        b = np.array(self.matrix, dtype=int).reshape(self.size, self.size)
        if not np.array_equal(b, -b.T):
            raise ValueError("the exchange matrix of a quiver is skew-symmetric")
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in r) for r in b))

    @classmethod
    def from_numpy(cls, b: np.ndarray) -> "Quiver":
        return cls(len(b), tuple(tuple(r) for r in b))

    @classmethod
    def from_arrows(cls, size: int, arrows: Iterable[Sequence[int]]) -> "Quiver":
        """arrows as (i, j) or (i, j, multiplicity), meaning i -> j"""
        b = np.zeros((size, size), dtype=int)
        for arrow in arrows:
            i, j = arrow[0], arrow[1]
            mult = arrow[2] if len(arrow) > 2 else 1
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            b[i, j] += mult
            b[j, i] -= mult
        return cls.from_numpy(b)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.matrix, dtype=int).reshape(self.size, self.size)

    def arrows(self) -> List[Tuple[int, int, int]]:
        """(i, j, multiplicity) for every i -> j, sorted"""
        return [
            (i, j, self.matrix[i][j])
            for i in range(self.size)
            for j in range(self.size)
            if self.matrix[i][j] > 0
        ]

    def opposite(self) -> "Quiver":
        return Quiver.from_numpy(-self.to_numpy())


@dataclass(frozen=True)
class Seed:
    """a quiver with a rational value on each vertex"""

    quiver: Quiver
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.quiver.size:
            raise ValueError(
                f"{len(self.values)} values for a quiver with {self.quiver.size} vertices"
            )
        object.__setattr__(self, "values", tuple(to_rat(v) for v in self.values))


def mutate_quiver(q: Quiver, k: int) -> Quiver:
    """mutation at vertex k

    Adds i -> j for every path i -> k -> j, reverses the arrows at k and
    cancels 2-cycles, all in one step on the exchange matrix.
    """
    if not 0 <= k < q.size:
        raise ValueError(f"vertex {k} outside 0..{q.size - 1}")
    b = q.to_numpy()
    col, row = b[:, k], b[k, :]
    out = b + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    out[k, :] = -b[k, :]
    out[:, k] = -b[:, k]
    return Quiver.from_numpy(out)


def exchange_value(s: Seed, k: int) -> Fraction:
    """(prod over i -> k of t_i + prod over k -> i of t_i) / t_k"""
    b = s.quiver.matrix
    incoming, outgoing = Fraction(1), Fraction(1)
    for i, t in enumerate(s.values):
        if b[i][k] > 0:
            incoming *= t ** b[i][k]
        elif b[k][i] > 0:
            outgoing *= t ** b[k][i]
    numerator = incoming + outgoing
    if s.values[k] == 0 or numerator == 0:
        raise ChartBoundaryError(f"mutation at vertex {k} leaves the chart", position=k)
    return numerator / s.values[k]


def mutate_seed(s: Seed, k: int) -> Seed:
    """exchanges the value at k and mutates the quiver

    Raises:
        ChartBoundaryError: t_k or the exchange numerator is zero
    """
    values = list(s.values)
    values[k] = exchange_value(s, k)
    return Seed(mutate_quiver(s.quiver, k), tuple(values))


def _check_period(n: int):
    if n < 5:
        raise ValueError(f"frieze quivers need n >= 5, got n={n}")


def build_frieze_quiver(n: int) -> Quiver:
    """the 2 x (n - 4) grid quiver with alternating square orientations

    Squares are oriented cycles, each one opposite to its neighbours. For
    n = 5 this is the single arrow y_1 -> x_1.
    """
    _check_period(n)
    width = n - 4
    arrows = []
    for k in range(1, width + 1):
        x, y = k - 1, width + k - 1
        arrows.append((y, x) if k % 2 else (x, y))
        if k < width:
            arrows.append((x, x + 1) if k % 2 else (x + 1, x))
            arrows.append((y + 1, y) if k % 2 else (y, y + 1))
    return Quiver.from_arrows(2 * width, arrows)


def plus_vertices(n: int) -> Tuple[int, ...]:
    """x_k with k odd and y_k with k even"""
    _check_period(n)
    width = n - 4
    xs = [k - 1 for k in range(1, width + 1, 2)]
    ys = [width + k - 1 for k in range(2, width + 1, 2)]
    return tuple(sorted(xs + ys))


def minus_vertices(n: int) -> Tuple[int, ...]:
    plus = set(plus_vertices(n))
    return tuple(v for v in range(2 * (n - 4)) if v not in plus)


def mutate_all(s: Seed, vertices: Iterable[int]) -> Seed:
    """composite mutation at pairwise unconnected vertices"""
    for k in vertices:
        s = mutate_seed(s, k)
    return s


def mutate_quiver_all(q: Quiver, vertices: Iterable[int]) -> Quiver:
    for k in vertices:
        q = mutate_quiver(q, k)
    return q


def bipartite_belt(n: int, init: Sequence[RatLike], steps: int) -> List[Seed]:
    """seeds obtained by applying mu_+ and mu_- alternately

    The k-th seed holds the entries of the double column at columns
    (k, k + 1) of the frieze whose chart at (0, 1) is ``init``.

    Args:
        n (int): period, at least 5
        init: 2(n - 4) positive values, x's then y's
        steps (int): number of composite mutations

    Returns:
        List[Seed]: steps + 1 seeds, the first one on the frieze quiver
    """
    _check_period(n)
    init = tuple(to_rat(v) for v in init)
    if len(init) != 2 * (n - 4):
        raise ValueError(f"the belt of period {n} starts from {2 * (n - 4)} values")
    if any(v <= 0 for v in init):
        raise ValueError("belt values must be positive")
    colours = (plus_vertices(n), minus_vertices(n))
    seeds = [Seed(build_frieze_quiver(n), init)]
    for step in range(steps):
        seeds.append(mutate_all(seeds[-1], colours[step % 2]))
    return seeds


def _split(n: int, values: Sequence[RatLike]) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    width = n - 4
    values = tuple(to_rat(v) for v in values)
    if len(values) != 2 * width:
        raise ValueError(f"a chart of period {n} has {2 * width} values")
    return values[:width], values[width:]


def frieze_from_double_column(
    n: int, x: Sequence[RatLike], y: Sequence[RatLike], col: int = 0
) -> xr.Dataset:
    """completes a closed frieze from the chart on columns col, col + 1

    Entries of row r are x[r] at the column with column + r even and y[r]
    at the other one. Columns to the right follow from

        v(r, c + 1) = (v(r, c) + v(r - 1, c) v(r + 1, c)) / v(r, c - 1)

    with the rows -1 and n - 4 of ones. The result is the band of rows
    -1 .. n - 4 over one period, like :func:`friezepy.frieze2.closed_band`.

    Raises:
        ChartBoundaryError: a division by zero, at the failing diamond
    """
    _check_period(n)
    width = n - 4
    x = tuple(to_rat(v) for v in x)
    y = tuple(to_rat(v) for v in y)
    if len(x) != width or len(y) != width:
        raise ValueError(f"a double column of period {n} has {width} rows")
    span = 2 * n
    grid = [[Fraction(1)] * span] + [[Fraction(0)] * span for _ in range(width)] + [
        [Fraction(1)] * span
    ]
    for r in range(width):
        for offset in (0, 1):
            grid[r + 1][offset] = x[r] if (col + offset + r) % 2 == 0 else y[r]
    for offset in range(1, span - 1):
        for r in range(width):
            left = grid[r + 1][offset - 1]
            if left == 0:
                raise ChartBoundaryError(
                    f"zero entry at row {r}, column {col + offset - 1}",
                    position=DoubledIndex.from_grid(r, col + offset),
                )
            grid[r + 1][offset + 1] = (
                grid[r + 1][offset] + grid[r][offset] * grid[r + 2][offset]
            ) / left
    rows = list(range(-1, width + 1))
    cols = list(range(FIRST_COLUMN, FIRST_COLUMN + span))
    values = np.empty((len(rows), span), dtype=object)
    for a in range(len(rows)):
        for b, c in enumerate(cols):
            values[a, b] = grid[a][(c - col) % span]
    coefficients = tuple(values[1]) if width else (Fraction(1),) * span
    return make_window(values, rows, cols, n, coefficients=coefficients, closed=True)


def chart_coefficients(w: xr.Dataset) -> CoefficientRow:
    """the coefficient row stored with a window"""
    return CoefficientRow.from_values(w.attrs["coefficients"])


class Move(IntEnum):
    """column change from one row of a zig-zag to the next"""

    LEFT = -1
    STRAIGHT = 0
    RIGHT = 1


@dataclass(frozen=True)
class ZigZag:
    """a double zig-zag: row r covers columns c_r, c_r + 1

    c_0 = start and c_{r+1} = c_r + steps[r]. Whether a straight row starts
    with its x or its y entry is fixed by the parity of c_r + r.
    """

    n: int
    steps: Tuple[Move, ...]
    start: int = 0

    def __post_init__(self):
        _check_period(self.n)
        if len(self.steps) != self.n - 5:
            raise ValueError(f"a zig-zag of period {self.n} has {self.n - 5} steps")
        object.__setattr__(self, "steps", tuple(Move(s) for s in self.steps))

    @classmethod
    def double_column(cls, n: int, start: int = 0) -> "ZigZag":
        return cls(n, (Move.STRAIGHT,) * (n - 5), start)

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[int]) -> "ZigZag":
        steps = tuple(b - a for a, b in zip(columns, columns[1:]))
        if any(abs(s) > 1 for s in steps):
            raise ValueError(f"columns {tuple(columns)} jump by more than one")
        return cls(n, steps, columns[0])

    @property
    def width(self) -> int:
        return self.n - 4

    def columns(self) -> Tuple[int, ...]:
        cols = [self.start]
        for step in self.steps:
            cols.append(cols[-1] + int(step))
        return tuple(cols)

    def vertex(self, row: int, col: int) -> int:
        """vertex index of the chart entry at (row, col)"""
        return row if (col + row) % 2 == 0 else self.width + row

    def cells(self) -> List[Tuple[int, int, int]]:
        """(row, col, vertex) of the two entries of every row"""
        return [
            (r, c + offset, self.vertex(r, c + offset))
            for r, c in enumerate(self.columns())
            for offset in (0, 1)
        ]


def zigzag_quiver(z: ZigZag) -> Quiver:
    """the quiver of a zig-zag chart

    With L_r, R_r the left and right entries of row r: R_r -> L_r inside a
    row, and between rows r and r + 1

        straight:  L_r -> R_{r+1}, L_{r+1} -> R_r
        left:      L_r -> R_{r+1}, R_{r+1} -> R_r, L_{r+1} -> L_r
        right:     L_r -> L_{r+1}, L_{r+1} -> R_r, R_r -> R_{r+1}
    """
    cols = z.columns()
    left = [z.vertex(r, c) for r, c in enumerate(cols)]
    right = [z.vertex(r, c + 1) for r, c in enumerate(cols)]
    arrows = [(right[r], left[r]) for r in range(z.width)]
    for r, step in enumerate(z.steps):
        if step == Move.STRAIGHT:
            arrows += [(left[r], right[r + 1]), (left[r + 1], right[r])]
        elif step == Move.LEFT:
            arrows += [(left[r], right[r + 1]), (right[r + 1], right[r]), (left[r + 1], left[r])]
        else:
            arrows += [(left[r], left[r + 1]), (left[r + 1], right[r]), (right[r], right[r + 1])]
    return Quiver.from_arrows(2 * z.width, arrows)


def zigzag_shift(z: ZigZag, row: int, move: Move) -> Tuple[ZigZag, int]:
    """moves one row of a zig-zag a column left or right

    Returns:
        the new zig-zag and the vertex to mutate: the left entry of the row
        for a move right, the right entry for a move left

    Raises:
        ValueError: the move breaks the zig-zag
    """
    move = Move(move)
    if move == Move.STRAIGHT:
        raise ValueError("a row moves LEFT or RIGHT")
    if not 0 <= row < z.width:
        raise ValueError(f"row {row} outside 0..{z.width - 1}")
    cols = list(z.columns())
    vertex = z.vertex(row, cols[row] + (1 if move == Move.LEFT else 0))
    cols[row] += int(move)
    return ZigZag.from_columns(z.n, cols), vertex


def read_zigzag(w: xr.Dataset, z: ZigZag) -> Tuple[Fraction, ...]:
    """chart values of a closed window on a zig-zag, x's then y's

    Raises:
        ChartBoundaryError: an entry of the zig-zag is zero
    """
    if not w.attrs.get("closed", False):
        raise ValueError("charts are read from closed windows")
    values: List[Fraction] = [Fraction(0)] * (2 * z.width)
    for r, c, vertex in z.cells():
        value = read_value(w, r, c)
        if value == 0:
            raise ChartBoundaryError(
                f"zero entry on the zig-zag at row {r}, column {c}",
                position=DoubledIndex.from_grid(r, c),
            )
        values[vertex] = value
    return tuple(values)


def redress(seed: Seed, z: ZigZag) -> Tuple[Seed, ZigZag]:
    """moves a zig-zag chart to a double column by single mutations

    Rows are pulled towards the even column at or left of c_0, the
    outermost row first.
    """
    target = z.start - z.start % 2
    moves = 0
    while True:
        cols = z.columns()
        if max(cols) > target:
            row, move = cols.index(max(cols)), Move.LEFT
        elif min(cols) < target:
            row, move = cols.index(min(cols)), Move.RIGHT
        else:
            break
        z, vertex = zigzag_shift(z, row, move)
        seed = mutate_seed(seed, vertex)
        moves += 1
    logger.debug("redressed a period %d chart in %d mutations", z.n, moves)
    return seed, z


def frieze_from_zigzag(z: ZigZag, values: Sequence[RatLike]) -> xr.Dataset:
    """completes the closed frieze whose chart on z has the given values"""
    seed, z = redress(Seed(zigzag_quiver(z), tuple(values)), z)
    x, y = _split(z.n, seed.values)
    return frieze_from_double_column(z.n, x, y, col=z.start)


def omega_order(n: int) -> Tuple[int, ...]:
    """x_1 .. x_{n-4} then y_{n-4} .. y_1"""
    _check_period(n)
    width = n - 4
    return tuple(range(width)) + tuple(range(2 * width - 1, width - 1, -1))


def omega_matrix(n: int) -> MatExact:
    """the exchange matrix of the frieze quiver, second row relabelled backwards"""
    order = list(omega_order(n))
    b = build_frieze_quiver(n).to_numpy()
    return MatExact.from_numpy(b[np.ix_(order, order)])


def omega_rank(n: int) -> int:
    return rank(omega_matrix(n))


_X_PATTERN = (1, 0, 0, 0, -1, 0)
_Y_PATTERN = (0, 1, 0, -1, 0, 0)


def omega_null_vectors(n: int) -> List[Tuple[Fraction, ...]]:
    """a basis of the kernel of omega_matrix(n), empty unless 3 divides n

    The first vector is the alternating combination of rows; the second
    swaps the roles of the two lines of the quiver.
    """
    _check_period(n)
    if n % 3:
        return []
    width = n - 4
    vectors = []
    for x_pattern, y_pattern in ((_X_PATTERN, _Y_PATTERN), (_Y_PATTERN, _X_PATTERN)):
        u = [Fraction(0)] * (2 * width)
        for k in range(1, width + 1):
            u[k - 1] = Fraction(x_pattern[(k - 1) % 6])
            u[2 * width - k] = Fraction(y_pattern[(k - 1) % 6])
        vectors.append(tuple(u))
    return vectors
