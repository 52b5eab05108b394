""" tests friezepy.coxeter_conway """
import random
from fractions import Fraction
from math import comb

import pytest

import friezepy  # noqa: F401  registers ds.frieze
from friezepy.coxeter_conway import (
    ClassicalFrieze,
    cc_entry,
    cc_entry_by_vectors,
    cc_enumerate,
    cc_frieze,
    cc_frieze_from_column,
    cc_is_closed,
    cc_monodromy,
    cc_verify_rule,
    is_arithmetic,
    quiddity_insert,
    triangulation_to_quiddity,
    triangulations,
    validate_triangulation,
)
from friezepy.errors import ChartBoundaryError
from friezepy.frieze2 import read_value
from friezepy.numeric_core import MatExact

_pentagon = ClassicalFrieze.from_values([1, 2, 2, 1, 3])
_hexagon = ClassicalFrieze.from_values([3, 1, 2, 3, 1, 2])

_rng = random.Random(17)


def _catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def test_quiddity_validation():
    """period at least 3 and one value per vertex"""
    with pytest.raises(ValueError):
        ClassicalFrieze.from_values([1, 1])
    with pytest.raises(ValueError):
        ClassicalFrieze(4, (1, 2, 1))
    assert _pentagon.c(6) == _pentagon.c(1) == 1


def test_pentagon_rows():
    """row 1 of (1, 2, 2, 1, 3) and the closing row of ones"""
    ds = cc_frieze(_pentagon, 3)
    assert list(ds["v"].values[0]) == [1, 2, 2, 1, 3]
    assert list(ds["v"].values[1]) == [1, 3, 1, 2, 2]
    assert all(v == 1 for v in ds["v"].values[2])
    assert ds.attrs["closed"]


def test_pentagon_monodromy():
    """the monodromy of a closed row is -Id"""
    assert cc_monodromy(_pentagon) == -MatExact.identity(2)
    assert cc_is_closed(_pentagon)
    assert not cc_is_closed(ClassicalFrieze.from_values([2, 2, 2, 2]))


def test_plus_identity_warns():
    """six ones give +Id, which does not close the frieze"""
    with pytest.warns(UserWarning):
        assert not cc_is_closed(ClassicalFrieze.from_values([1] * 6))


def test_entries_agree():
    """tridiagonal determinants, vector determinants and the window"""
    quiddities = [_pentagon, _hexagon, ClassicalFrieze.from_values([Fraction(1, 2), 3, -1, 2])]
    for _ in range(40):
        n = _rng.randint(3, 8)
        quiddities.append(
            ClassicalFrieze.from_values([Fraction(_rng.randint(1, 7), _rng.randint(1, 3)) for _ in range(n)])
        )
    for q in quiddities:
        ds = cc_frieze(q, q.n, top=-2)
        for r in ds["row"].values:
            for j in ds["col"].values:
                i = int(j) + int(r)
                value = read_value(ds, int(r), int(j))
                if r >= -1:
                    assert cc_entry(q, i, int(j)) == value
                assert cc_entry_by_vectors(q, i, int(j)) == value
    with pytest.raises(ValueError):
        cc_entry(_pentagon, 1, 3)


def test_pattern_rule():
    """unimodular diamonds hold in every generated window"""
    assert cc_verify_rule(cc_frieze(_hexagon, 4, top=-2)) == []
    assert cc_frieze(_pentagon, 3, top=-1).frieze.verify() == []
    ds = cc_frieze(_hexagon, 3).copy(deep=True)
    ds["v"].values[1, 2] = Fraction(9)
    assert (1, 3) in cc_verify_rule(ds)


def test_arithmetic():
    """positive integer rows versus closed rows with other entries"""
    assert is_arithmetic(_pentagon)
    assert is_arithmetic(ClassicalFrieze.from_values([1, 1, 1]))
    assert not is_arithmetic(ClassicalFrieze.from_values([2, 2, 2, 2]))
    negative = ClassicalFrieze.from_values(cc_frieze_from_column(5, [-2, 3])["v"].values[1])
    assert cc_is_closed(negative)
    assert not is_arithmetic(negative)


def test_triangulations_of_small_polygons():
    """diagonals of the square and the fan of the pentagon"""
    assert triangulation_to_quiddity(4, [(1, 3)]).as_ints() == (2, 1, 2, 1)
    assert triangulation_to_quiddity(4, [(2, 4)]).as_ints() == (1, 2, 1, 2)
    assert triangulation_to_quiddity(5, [(1, 3), (1, 4)]).as_ints() == (3, 1, 2, 2, 1)
    assert len(triangulations(3)) == 1


def test_invalid_triangulations():
    """crossings, sides and wrong counts"""
    with pytest.raises(ValueError):
        validate_triangulation(4, [(1, 3), (2, 4)])
    with pytest.raises(ValueError):
        validate_triangulation(6, [(1, 4), (2, 5), (3, 6)])
    with pytest.raises(ValueError):
        validate_triangulation(5, [(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        validate_triangulation(5, [(1, 3)])


def test_counts():
    """Catalan numbers 2, 5, 14, 42 by every method"""
    for n, count in ((4, 2), (5, 5), (6, 14), (7, 42)):
        found = cc_enumerate(n)
        assert len(found) == count
        assert found == cc_enumerate(n, "triangulations")
        assert found == cc_enumerate(n, "search")
        for t in found:
            assert is_arithmetic(ClassicalFrieze.from_values(t))
    with pytest.raises(ValueError):
        cc_enumerate(5, "guess")


def test_triangulation_bijection():
    """Catalan(n - 2) triangulations, each with its own arithmetic frieze"""
    for n in range(3, 9):
        found = triangulations(n)
        assert len(found) == len(set(found)) == _catalan(n - 2)
        images = {triangulation_to_quiddity(n, sorted(t)).as_ints() for t in found}
        assert len(images) == len(found)
        assert images == cc_enumerate(n)


def test_search_reduces_ears():
    """every row kept by the search has a 1 with both neighbours above 1"""
    for q in cc_enumerate(7, "search"):
        n = len(q)
        assert any(q[i] == 1 and q[i - 1] > 1 and q[(i + 1) % n] > 1 for i in range(n))


def test_a2_column_chart():
    """(x2 + 1)/x1, (x1 + x2 + 1)/(x1 x2) and (x1 + 1)/x2 from the chart (x1, x2)"""
    for _ in range(30):
        x1 = Fraction(_rng.randint(1, 9), _rng.randint(1, 5))
        x2 = Fraction(_rng.randint(1, 9), _rng.randint(1, 5))
        ds = cc_frieze_from_column(5, [x1, x2])
        assert read_value(ds, 0, 2) == (x2 + 1) / x1
        assert read_value(ds, 1, 2) == (x1 + x2 + 1) / (x1 * x2)
        assert read_value(ds, 0, 3) == (x1 + 1) / x2
        assert cc_verify_rule(ds) == []


def test_quiddity_insert():
    """gluing a triangle on a side"""
    assert quiddity_insert((1, 1, 1), 0) == (2, 1, 2, 1)
    assert quiddity_insert((1, 2, 2, 1, 3), 4) == (2, 2, 2, 1, 4, 1)


def test_column_chart():
    """the charts (3, 5) and (2, 3) of the pentagon"""
    ds = cc_frieze_from_column(5, [3, 5])
    assert list(ds["row"].values) == [-1, 0, 1, 2]
    assert list(ds["col"].values) == [1, 2, 3, 4, 5]
    assert read_value(ds, 0, 2) == 2
    assert read_value(ds, 1, 2) == Fraction(3, 5)
    assert read_value(ds, 0, 3) == Fraction(4, 5)
    assert cc_verify_rule(ds) == []
    q = ClassicalFrieze.from_values(cc_frieze_from_column(5, [2, 3])["v"].values[1])
    assert q.as_ints() == (2, 2, 1, 3, 1)
    assert cc_is_closed(q)


def test_column_chart_boundary():
    """a zero on the column stops the completion"""
    with pytest.raises(ChartBoundaryError):
        cc_frieze_from_column(5, [0, 1])
    with pytest.raises(ValueError):
        cc_frieze_from_column(5, [1])
