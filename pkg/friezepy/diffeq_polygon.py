# -*- coding: utf-8 -*-

"""
Third order difference equations

    V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3}

their monodromy, and the polygons in 3-space they describe. A coefficient
row closes (gives a closed frieze) exactly when the monodromy is the
identity; its solution is then an n-gon with unit consecutive determinants
whose 3x3 determinants are the frieze entries.

The only floating point code of the package lives in :func:`lift_projective`.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np
import xarray as xr
from scipy.linalg import solve_circulant

from friezepy.errors import (
    DegeneracyError,
    NotClosedError,
    NotInvertibleError,
    UnimodularityError,
)
from friezepy.frieze2 import FIRST_COLUMN, CoefficientRow, DoubledIndex, make_window
from friezepy.numeric_core import MatExact, RatLike, det3, mat_prod, to_rat

logger = logging.getLogger(__name__)

# Defaults
LIFT_TOLERANCE: float = 1e-9  # relative, on the determinants of a lift

Vector3 = Tuple[Fraction, Fraction, Fraction]
BASIS: Tuple[Vector3, ...] = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)


def companion_matrix(a: RatLike, b: RatLike) -> MatExact:
    """N with [V_{i-2}, V_{i-1}, V_i] N = [V_{i-1}, V_i, V_{i+1}]"""
    return MatExact.from_rows([[0, 0, 1], [1, 0, -to_rat(b)], [0, 1, to_rat(a)]])


@dataclass(frozen=True)
class Monodromy:
    """V_{i+n} = M V_i for the solution started at the standard basis"""

    m: MatExact

    def __post_init__(self):
        if self.m.rows != 3 or self.m.cols != 3:
            raise ValueError("the monodromy is a 3x3 matrix")

    @property
    def is_identity(self) -> bool:
        return self.m == MatExact.identity(3)


def monodromy(coeffs: CoefficientRow) -> Monodromy:
    """M = N_1 N_2 ... N_n"""
    factors = (companion_matrix(coeffs.a(j), coeffs.b(j)) for j in range(1, coeffs.n + 1))
    return Monodromy(mat_prod(factors, 3))


def is_closed(coeffs: CoefficientRow) -> bool:
    """True iff the monodromy is the identity"""
    return monodromy(coeffs).is_identity


@dataclass(frozen=True)
class Polygon3:
    """a cyclic n-gon of exact 3-vectors; vertex(k) is V_k with k taken mod n

    Vertices are usually unimodular, det(V_{i-1}, V_i, V_{i+1}) = 1, but the
    type accepts any vectors so that the check can be reported.
    """

    n: int
    vertices: Tuple[Vector3, ...]

    def __post_init__(self):
        if len(self.vertices) != self.n:
            raise ValueError(f"{len(self.vertices)} vertices for an n={self.n} polygon")
        if any(len(v) != 3 for v in self.vertices):
            raise ValueError("vertices are 3-vectors")
        object.__setattr__(
            self,
            "vertices",
            tuple(tuple(to_rat(x) for x in v) for v in self.vertices),
        )

    @classmethod
    def from_vertices(cls, vertices: Sequence[Sequence[RatLike]]) -> "Polygon3":
        return cls(len(vertices), tuple(tuple(v) for v in vertices))

    def vertex(self, k: int) -> Vector3:
        return self.vertices[(k - 1) % self.n]

    def determinant(self, i: int) -> Fraction:
        """det(V_{i-1}, V_i, V_{i+1})"""
        return det3(self.vertex(i - 1), self.vertex(i), self.vertex(i + 1))

    @property
    def is_unimodular(self) -> bool:
        return all(self.determinant(i) == 1 for i in range(1, self.n + 1))

    def to_numpy(self) -> np.ndarray:
        """float copy, one vertex per row"""
        return np.array([[float(x) for x in v] for v in self.vertices])


def _step(a: Fraction, b: Fraction, v1: Vector3, v2: Vector3, v3: Vector3) -> Vector3:
    """a V_{i-1} - b V_{i-2} + V_{i-3} for (v1, v2, v3) = (V_{i-3}, V_{i-2}, V_{i-1})"""
    return tuple(a * z - b * y + x for x, y, z in zip(v1, v2, v3))


def solve_polygon(coeffs: CoefficientRow) -> Polygon3:
    """the n-gon V_1 .. V_n of the solution with V_{-2}, V_{-1}, V_0 = e_1, e_2, e_3

    Raises:
        NotClosedError: the monodromy is not the identity (kept on the error)
    """
    mono = monodromy(coeffs)
    if not mono.is_identity:
        raise NotClosedError(f"monodromy is not the identity: {mono.m}", monodromy=mono)
    window = list(BASIS)
    vertices = []
    for i in range(1, coeffs.n + 1):
        nxt = _step(coeffs.a(i), coeffs.b(i), *window[-3:])
        window.append(nxt)
        vertices.append(nxt)
    return Polygon3(coeffs.n, tuple(vertices))


def polygon_to_frieze(poly: Polygon3, i: RatLike, j: RatLike) -> Fraction:
    """v_{i,j} read off the polygon

    On the integer grid v_{i,j} = det(V_{j-3}, V_{j-2}, V_i); on the half
    grid v_{i'-1/2, j'-1/2} = det(V_{i'-1}, V_{i'}, V_{j'-3}).
    """
    index = DoubledIndex.from_half_integers(i, j)
    if index.is_integer:
        i, j = index.p // 2, index.q // 2
        return det3(poly.vertex(j - 3), poly.vertex(j - 2), poly.vertex(i))
    i, j = (index.p + 1) // 2, (index.q + 1) // 2
    return det3(poly.vertex(i - 1), poly.vertex(i), poly.vertex(j - 3))


def polygon_to_coefficients(poly: Polygon3) -> CoefficientRow:
    """recovers (a_i, b_i) from V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3}

    Raises:
        DegeneracyError: three consecutive vertices are linearly dependent
        UnimodularityError: a consecutive determinant is not one
    """
    a, b = [], []
    for i in range(1, poly.n + 1):
        u, v, w, target = (poly.vertex(i - 3), poly.vertex(i - 2), poly.vertex(i - 1), poly.vertex(i))
        d = det3(u, v, w)
        if d == 0:
            raise DegeneracyError(f"V_{i - 3}, V_{i - 2}, V_{i - 1} are linearly dependent")
        if d != 1:
            raise UnimodularityError(f"det(V_{i - 3}, V_{i - 2}, V_{i - 1}) = {d}")
        # Cramer's rule for V_i = x V_{i-3} + y V_{i-2} + z V_{i-1}
        x = det3(target, v, w) / d
        y = det3(u, target, w) / d
        z = det3(u, v, target) / d
        if x != 1:
            raise UnimodularityError(f"det(V_{i - 2}, V_{i - 1}, V_{i}) = {x}")
        a.append(z)
        b.append(-y)
    return CoefficientRow.from_ab(a, b)


def polygon_window(poly: Polygon3, depth: int, top: int = 0) -> xr.Dataset:
    """the frieze window of rows top .. depth - 1 built from determinants"""
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    rows = list(range(top, depth))
    cols = list(range(FIRST_COLUMN, FIRST_COLUMN + 2 * poly.n))
    values = np.empty((len(rows), len(cols)), dtype=object)
    for a, r in enumerate(rows):
        for b, c in enumerate(cols):
            index = DoubledIndex.from_grid(r, c)
            values[a, b] = polygon_to_frieze(
                poly, Fraction(index.p, 2), Fraction(index.q, 2)
            )
    coeffs = polygon_to_coefficients(poly)
    return make_window(values, rows, cols, poly.n, coefficients=coeffs.values, closed=True)


def is_convex(poly: Polygon3) -> bool:
    """every other vertex lies on the positive side of the plane V_{i-1}, V_i"""
    for i in range(1, poly.n + 1):
        left, right = poly.vertex(i - 1), poly.vertex(i)
        for j in range(1, poly.n + 1):
            if (j - i) % poly.n in (0, poly.n - 1):
                continue
            if det3(left, right, poly.vertex(j)) <= 0:
                return False
    return True


def projectivize(poly: Polygon3) -> np.ndarray:
    """float unit direction vectors of the vertices, one per row"""
    points = poly.to_numpy()
    return points / np.linalg.norm(points, axis=1, keepdims=True)


def _cyclic_determinants(points: np.ndarray) -> np.ndarray:
    """det(P_{i-1}, P_i, P_{i+1}) for i = 0 .. n - 1"""
    stacked = np.stack([np.roll(points, 1, axis=0), points, np.roll(points, -1, axis=0)], axis=2)
    return np.linalg.det(stacked)


def _solve_gf2(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Gauss-Jordan elimination over GF(2) for an invertible matrix"""
    size = len(rhs)
    aug = np.concatenate([matrix % 2, (rhs % 2)[:, None]], axis=1).astype(np.uint8)
    for col in range(size):
        pivots = np.nonzero(aug[col:, col])[0]
        if not len(pivots):
            raise NotInvertibleError("the sign system is singular over GF(2)")
        pivot = col + pivots[0]
        aug[[col, pivot]] = aug[[pivot, col]]
        rows = np.nonzero(aug[:, col])[0]
        rows = rows[rows != col]
        aug[rows] ^= aug[col]
    return aug[:, -1]


@dataclass(frozen=True, eq=False)
class Lift:
    """scaled representatives of projective points

    ``negative_product`` records that the determinants of the input
    representatives multiply to a negative number.
    """

    vertices: np.ndarray
    negative_product: bool

    def determinants(self) -> np.ndarray:
        return _cyclic_determinants(self.vertices)

    def is_convex(self, tolerance: float = LIFT_TOLERANCE) -> bool:
        n = len(self.vertices)
        for i in range(n):
            normal = np.cross(self.vertices[i - 1], self.vertices[i])
            for j in range(n):
                if j in (i, (i - 1) % n):
                    continue
                if np.dot(normal, self.vertices[j]) <= tolerance:
                    return False
        return True


def lift_projective(points: Sequence[Sequence[float]]) -> Lift:
    """lifts projective points to vectors with unit consecutive determinants

    With representatives P_i and D_i = det(P_{i-1}, P_i, P_{i+1}) we look for
    t_i with t_{i-1} t_i t_{i+1} D_i = 1. Absolute values come from the
    circulant system s_{i-1} + s_i + s_{i+1} = -log|D_i| in s = log|t|,
    signs from the same system over GF(2). Both are invertible unless
    3 divides n.

    Args:
        points: n >= 4 homogeneous representatives, one per row

    Returns:
        Lift: vertices t_i P_i

    Raises:
        NotInvertibleError: 3 divides n
        DegeneracyError: three consecutive points are collinear
    """
    points = np.asarray(points, dtype=float)
    n = len(points)
    if points.ndim != 2 or points.shape[1] != 3 or n < 4:
        raise ValueError("expected at least four points in homogeneous coordinates")
    if n % 3 == 0:
        raise NotInvertibleError(f"the lifting system is singular for n={n}")
    dets = _cyclic_determinants(points)
    norms = np.linalg.norm(points, axis=1)
    if np.any(norms == 0):
        raise DegeneracyError("a point has no direction")
    # geometric mean of the norms, cubed, kept in log space
    scale = np.exp(3.0 * np.mean(np.log(norms)))
    if np.any(np.abs(dets) <= LIFT_TOLERANCE * scale):
        raise DegeneracyError("three consecutive points are collinear")
    first_column = np.zeros(n)
    first_column[[0, 1, -1]] = 1.0
    logs = solve_circulant(first_column, -np.log(np.abs(dets)))
    circulant = np.array([[first_column[(i - j) % n] for j in range(n)] for i in range(n)])
    flips = _solve_gf2(circulant.astype(np.uint8), (dets < 0).astype(np.uint8))
    t = np.exp(logs) * np.where(flips == 1, -1.0, 1.0)
    lifted = points * t[:, None]
    negative = bool(np.prod(np.sign(dets)) < 0)
    logger.debug("lifted %d points, negative product: %s", n, negative)
    return Lift(lifted, negative)
