""" tests friezepy.io """
import io as _io
import json
from fractions import Fraction

import numpy as np
import pytest

from friezepy import io
from friezepy.arithmetic_friezes import named_pattern
from friezepy.cluster import build_frieze_quiver
from friezepy.coxeter_conway import ClassicalFrieze, cc_frieze
from friezepy.diffeq_polygon import solve_polygon
from friezepy.frieze2 import CoefficientRow, closed_band, frieze_from_coefficients, make_window

try:
    from importlib.resources import files
except ImportError:
    from importlib_resources import files  # type: ignore

path = files("friezepy") / "data"

_p13 = named_pattern("13")


def _same_window(a, b):
    assert list(a["row"].values) == list(b["row"].values)
    assert list(a["col"].values) == list(b["col"].values)
    assert (a["v"].values == b["v"].values).all()


def test_stored_patterns():
    """every data file declares a closed frieze of the right period"""
    for label in ("11", "12", "13", "14", "15", "16", "17", "octagon"):
        data = json.loads((path / f"pattern{label}.json").read_text())
        assert data["closed"]
        assert io.frieze_from_json(json.dumps(data)).n == data["n"]


def test_frieze_file(tmp_path):
    """save then load, integers and rationals"""
    row = CoefficientRow.from_values([Fraction(1, 2), 3, -2, Fraction(5, 3), 1, 1, 2, 0])
    target = tmp_path / "frieze.json"
    io.save_frieze(row, target)
    assert io.load_frieze(target) == row
    data = json.loads(target.read_text())
    assert data["coefficients"][:2] == ["1/2", "3"]
    assert data["closed"] is False


def test_frieze_declared_period():
    """a wrong n is refused"""
    with pytest.raises(ValueError):
        io.frieze_from_json('{"n": 5, "coefficients": ["1", "1", "1", "1", "1", "1", "1", "1"]}')


def test_polygon_and_points():
    """polygon vertices as exact strings, points as floats"""
    poly = solve_polygon(named_pattern("12"))
    assert io.polygon_from_json(io.polygon_to_json(poly)) == poly
    points = io.points_from_json('{"points": [["1/2", 0, 1], [0, 1, 1], [1, 1, 2]]}')
    assert points.shape == (3, 3)
    assert np.allclose(points[0], [0.5, 0.0, 1.0])


def test_quiver_and_seed():
    """arrows with multiplicities, values optional"""
    q = build_frieze_quiver(7)
    assert io.quiver_from_json(io.quiver_to_json(q)) == (q, None)
    values = (Fraction(2), Fraction(1, 3), 1, 1, 1, 5)
    back, seed_values = io.quiver_from_json(io.quiver_to_json(q, values))
    assert back == q
    assert seed_values == values


def test_quiddity():
    """quiddity rows keep their order"""
    q = ClassicalFrieze.from_values([1, 2, 2, 1, 3])
    assert io.quiddity_from_json(io.quiddity_to_json(q)) == q


def test_tuples():
    """one sorted array per line"""
    stream = _io.StringIO()
    io.write_tuples([(2, 1), (1, 3)], stream)
    assert stream.getvalue() == "[1, 3]\n[2, 1]\n"
    assert io.read_tuples(_io.StringIO(stream.getvalue() + "\n")) == {(1, 3), (2, 1)}


def test_band_csv():
    """pattern (13): header and four rows, twos in the middle"""
    lines = io.window_to_csv(closed_band(_p13)).splitlines()
    assert lines[0] == ",".join(str(c) for c in range(1, 13))
    assert len(lines) == 5
    assert lines[1] == ",".join(["1"] * 12)
    assert lines[2] == lines[3] == ",".join(["2"] * 12)


def test_empty_window_csv():
    """no rows leaves the header"""
    ds = make_window(np.empty((0, 3), dtype=object), [], [1, 2, 3], 3)
    assert io.window_to_csv(ds) == "1,2,3\n"


def test_window_csv_roundtrip():
    """rationals and blanks survive"""
    ds = frieze_from_coefficients(CoefficientRow.from_values([Fraction(1, 2), 2, 3, 1, 1, 2, 2, 5]), 3, top=-1)
    back = io.window_from_csv(io.window_to_csv(ds), 4, top=-1)
    _same_window(ds, back)
    values = np.array([[Fraction(1), None], [None, Fraction(2, 3)]], dtype=object)
    sparse = make_window(values, [0, 1], [0, 1], 0, kind="infinite", periodic=False, boundary=(1,))
    assert io.window_to_csv(sparse).splitlines()[1] == "1,"
    _same_window(sparse, io.window_from_csv(io.window_to_csv(sparse), 0, kind="infinite"))


def test_window_json_roundtrip():
    """entries keyed by p,q and the attributes"""
    ds = closed_band(_p13)
    text = io.window_to_json(ds)
    data = json.loads(text)
    assert data["entries"]["1,1"] == "2"
    assert data["entries"]["0,2"] == "1"
    back = io.window_from_json(text)
    _same_window(ds, back)
    assert back.attrs["closed"] and back.attrs["n"] == 6
    assert back.frieze.coefficients == _p13
    classical = cc_frieze(ClassicalFrieze.from_values([1, 2, 2, 1, 3]), 3)
    back = io.window_from_json(io.window_to_json(classical))
    _same_window(classical, back)
    assert back.attrs["kind"] == "classical"
