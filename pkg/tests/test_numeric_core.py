""" tests friezepy.numeric_core """
import random
from fractions import Fraction

import pytest

from friezepy.numeric_core import (
    DimensionError,
    MatExact,
    det,
    det3,
    format_rat,
    mat_mul,
    mat_prod,
    mat_vec,
    parse_rats,
    rank,
    to_rat,
)

_rng = random.Random(7)


def _random_matrix(size: int) -> MatExact:
    return MatExact.from_rows(
        [[Fraction(_rng.randint(-5, 5), _rng.randint(1, 3)) for _ in range(size)] for _ in range(size)]
    )


def test_to_rat():
    """ints, strings and Fractions are accepted, floats are not"""
    assert to_rat("3/4") == Fraction(3, 4)
    assert to_rat(" -2 ") == -2
    assert to_rat(Fraction(1, 3)) == Fraction(1, 3)
    with pytest.raises(TypeError):
        to_rat(2.5)
    with pytest.raises(TypeError):
        to_rat(True)


def test_format_and_parse():
    """integers are written without a denominator"""
    assert format_rat(Fraction(4, 2)) == "2"
    assert format_rat(Fraction(-1, 3)) == "-1/3"
    assert parse_rats("1, 3/2,2,") == (1, Fraction(3, 2), 2)


def test_matrix_shapes():
    """constructors and accessors agree on the layout"""
    m = MatExact.from_columns([[1, 2, 3], [4, 5, 6]])
    assert (m.rows, m.cols) == (3, 2)
    assert m[0, 1] == 4
    assert m.column(0) == (1, 2, 3)
    assert m.transpose().row(1) == (4, 5, 6)
    assert str(MatExact.identity(2)) == "[[1, 0], [0, 1]]"
    with pytest.raises(DimensionError):
        MatExact.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionError):
        mat_mul(m, m)


def test_det_small():
    """hand computed determinants, including a row swap"""
    assert det(MatExact.from_rows([[2, 1], [1, 1]])) == 1
    assert det(MatExact.from_rows([[1, 2, 3], [0, 1, 4], [5, 6, 0]])) == 1
    assert det(MatExact.from_rows([[0, 1], [1, 0]])) == -1
    assert det(MatExact.from_rows([[1, 2], [2, 4]])) == 0
    assert det(MatExact.zeros(0, 0)) == 1
    with pytest.raises(DimensionError):
        det(MatExact.zeros(2, 3))


def test_det_multiplicative():
    """det(AB) = det(A) det(B) on random rational matrices"""
    for size in (2, 3, 4, 5):
        a, b = _random_matrix(size), _random_matrix(size)
        assert det(a @ b) == det(a) * det(b)


def test_det3_columns():
    """det3 takes the vectors as columns"""
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert det3(e1, e2, e3) == 1
    assert det3(e2, e1, e3) == -1
    u, v, w = (1, 2, 0), (0, 1, 3), (2, 0, 1)
    assert det3(u, v, w) == det(MatExact.from_columns([u, v, w]))


def test_rank():
    """rank over the rationals"""
    assert rank(MatExact.identity(3)) == 3
    assert rank(MatExact.zeros(3, 4)) == 0
    assert rank(MatExact.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(MatExact.from_rows([[0, 1, 2], [0, 2, 4], [1, 0, 0]])) == 2


def test_products():
    """mat_prod is ordered and starts from the identity"""
    assert mat_prod([], 3) == MatExact.identity(3)
    a, b = _random_matrix(3), _random_matrix(3)
    assert mat_prod([a, b], 3) == a @ b
    assert mat_vec(MatExact.identity(3), (1, 2, 3)) == (1, 2, 3)
    assert (-MatExact.identity(2))[1, 1] == -1


def test_documented_examples():
    """rotation block, tridiagonal, omega of period 6 and an inverse pair"""
    assert det(MatExact.identity(3)) == 1
    assert det(MatExact.from_rows([[0, 1], [-1, 0]])) == 1
    assert det(MatExact.from_rows([[2, 1, 0], [1, 2, 1], [0, 1, 2]])) == 4
    assert rank(MatExact.zeros(4, 4)) == 0
    assert rank(MatExact.identity(5)) == 5
    omega6 = MatExact.from_rows([[0, 1, 0, -1], [-1, 0, 1, 0], [0, -1, 0, 1], [1, 0, -1, 0]])
    assert rank(omega6) == 2
    n = MatExact.from_rows([[0, 0, 1], [1, 0, -1], [0, 1, 1]])
    n_inv = MatExact.from_rows([[1, 1, 0], [-1, 0, 1], [1, 0, 0]])
    assert mat_mul(n, n_inv) == MatExact.identity(3)
    assert mat_mul(n_inv, n) == MatExact.identity(3)
    shear = MatExact.from_rows([[1, 1], [0, 1]])
    assert mat_mul(shear, shear) == MatExact.from_rows([[1, 2], [0, 1]])


def test_rank_of_transpose():
    """rank(A) = rank(A^T), also for wide and rank deficient matrices"""
    for _ in range(30):
        rows, cols, inner = _rng.randint(1, 5), _rng.randint(1, 5), _rng.randint(1, 4)
        a = MatExact.from_rows([[_rng.randint(-3, 3) for _ in range(inner)] for _ in range(rows)])
        b = MatExact.from_rows([[_rng.randint(-3, 3) for _ in range(cols)] for _ in range(inner)])
        m = a @ b
        assert rank(m) == rank(m.transpose())
        assert rank(m) <= min(rows, cols, inner)
