""" tests the frieze command line """
import json
import logging

import numpy as np

from friezepy import cli
from friezepy.arithmetic_friezes import named_pattern
from friezepy.cluster import chart_coefficients, frieze_from_double_column
from friezepy.diffeq_polygon import solve_polygon
from friezepy.io import read_tuples, save_frieze

try:
    from importlib.resources import files
except ImportError:
    from importlib_resources import files  # type: ignore

path = files("friezepy") / "data"

p12 = str(path / "pattern12.json")
p13 = str(path / "pattern13.json")


def test_check_closed(capsys):
    """pattern (12) closes with width one"""
    assert cli.main(["check", "--frieze", p12]) == 0
    assert capsys.readouterr().out.strip() == "closed: true, width: 1"


def test_check_reports(capsys):
    """symmetry and SL3 lines follow the closure line"""
    assert cli.main(["check", "--frieze", p13, "--symmetries", "--sl3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "closed: true, width: 2"
    assert lines[1] == "row periodic: true, diagonal periodic: true, glide: true"
    assert lines[2] == "sl3: true, failures: 0"


def test_check_open_row(capsys):
    """the all ones row of period 5 exits with 1"""
    assert cli.main(["check", "--row", ",".join(["1"] * 10)]) == 1
    assert capsys.readouterr().out.startswith("closed: false, monodromy: [[")


def test_usage_errors(capsys):
    """unknown verbs, missing sources and bad numbers exit with 2"""
    assert cli.main(["unfold"]) == 2
    assert cli.main(["orbits"]) == 2
    assert cli.main(["check"]) == 2
    assert cli.main(["check", "--row", "1,x"]) == 2
    assert cli.main(["enumerate", "--n", "3"]) == 2
    capsys.readouterr()


def test_gen_csv(capsys):
    """the closed band of pattern (13)"""
    assert cli.main(["gen", "--frieze", p13, "--depth", "3", "--top", "-1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(str(c) for c in range(1, 13))
    assert lines[1] == ",".join(["1"] * 12)
    assert lines[2] == lines[3] == ",".join(["2"] * 12)
    assert lines[4] == ",".join(["1"] * 12)


def test_entries(capsys):
    """the three methods agree on v_{2,1} of pattern (13)"""
    for method in ("recurrence", "determinant", "polygon"):
        assert cli.main(["entries", "--frieze", p13, "--p", "4", "--q", "2", "--method", method]) == 0
        assert capsys.readouterr().out.strip() == "2"
    assert cli.main(["entries", "--frieze", p13, "--p", "3", "--q", "2"]) == 2


def test_enumerate_and_orbits(capsys, tmp_path):
    """five tuples for n = 5 in a single class"""
    out = tmp_path / "five.jsonl"
    assert cli.main(["enumerate", "--n", "5", "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "count: 5, bound: 8"
    with open(out) as stream:
        assert len(read_tuples(stream)) == 5
    assert cli.main(["orbits", "--in", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["orbits: 1", "size: 5, representative: [1, 1, 2, 3, 2, 1, 1, 2, 3, 2]"]


def test_stabilize(capsys):
    """the n = 4 frieze grows to period 5"""
    assert cli.main(["stabilize", "--row", ",".join(["1"] * 8)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 5
    assert data["coefficients"] == ["2", "3", "2", "1", "1", "2", "3", "2", "1", "1"]


def test_stabilize_not_arithmetic(capsys, tmp_path):
    """a closed row with negative entries is a domain error"""
    negative = chart_coefficients(frieze_from_double_column(5, [-2], [3]))
    filename = tmp_path / "negative.json"
    save_frieze(negative, filename)
    assert cli.main(["stabilize", "--frieze", str(filename)]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_consum(capsys):
    """(12) + (13) is the octagon"""
    assert cli.main(["consum", "--frieze", p12, "--other", p13]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["coefficients"] == [str(v) for v in named_pattern("octagon").as_ints()]
    assert data["closed"]


def test_polygon_roundtrip(capsys, tmp_path):
    """polygon of pattern (12) and back to its coefficients"""
    assert cli.main(["polygon", "--frieze", p12, "--convex"]) == 0
    captured = capsys.readouterr()
    assert captured.err.strip() == "convex: true"
    target = tmp_path / "poly.json"
    target.write_text(captured.out)
    assert len(json.loads(captured.out)["vertices"]) == 5
    assert cli.main(["polygon", "--polygon", str(target)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["coefficients"] == ["1", "1", "2", "3", "2", "1", "1", "2", "3", "2"]


def test_lift(capsys, tmp_path):
    """scaled vertices lift back to determinant one"""
    points = solve_polygon(named_pattern("octagon")).to_numpy() * 3.0
    target = tmp_path / "points.json"
    target.write_text(json.dumps({"points": points.tolist()}))
    assert cli.main(["lift", "--points", str(target)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert np.allclose(data["determinants"], 1.0)
    assert data["convex"]
    assert not data["negative_product"]


def test_belt(capsys):
    """2n + 1 seeds for the ones of period 5"""
    assert cli.main(["belt", "--n", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 11
    assert json.loads(lines[1]) == ["2", "1"]
    assert lines[0] == lines[10]


def test_zigzag(capsys):
    """a left step of period 6 completes to a window"""
    assert cli.main(["zigzag", "--n", "6", "--moves", "L", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["closed"] and data["n"] == 6
    assert cli.main(["zigzag", "--n", "6", "--moves", "Q"]) == 2


def test_omega(capsys):
    """corank two when 3 divides n"""
    assert cli.main(["omega", "--n", "9"]) == 0
    assert capsys.readouterr().out.startswith("rank: 8, corank: 2, nullvector: [")
    assert cli.main(["omega", "--n", "7"]) == 0
    assert capsys.readouterr().out.strip() == "rank: 6, corank: 0, nullvector: []"


def test_cc(capsys):
    """14 classical friezes of period 6, the pentagon window"""
    assert cli.main(["cc", "--count", "6"]) == 0
    assert capsys.readouterr().out.strip() == "count: 14"
    assert cli.main(["cc", "--quiddity", "1,2,2,1,3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1:] == ["1,2,2,1,3", "1,3,1,2,2"]


def test_grow(capsys):
    """double column of ones, 5 on the diagonal below row 0"""
    assert cli.main(["grow", "--shape", "double-column", "--format", "json"]) == 0
    entries = json.loads(capsys.readouterr().out)["entries"]
    assert entries["4,4"] == "5"
    assert entries["5,3"] == "15"
    assert cli.main(["grow", "--shape", "RL", "--rows", "2", "--cols", "4"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "1,1,2,3"


def test_log_level(caplog):
    """unknown levels fall back to WARNING with a message"""
    with caplog.at_level(logging.WARNING):
        cli.configure_logging({"FRIEZE_LOG": "loud"})
    assert "unknown FRIEZE_LOG level 'LOUD'" in caplog.text
