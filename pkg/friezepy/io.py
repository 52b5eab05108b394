# -*- coding: utf-8 -*-

"""
Contains functions for reading and writing friezes, polygons, quivers,
quiddity rows and windows.

All rationals are written as exact strings: "p/q", or plain digits for
integers. The formats are described in docs/formats.md.
"""

import io as _io
import json
import pathlib
from fractions import Fraction
from typing import IO, Iterable, List, Optional, Sequence, Set, Tuple, Union

import numpy as np
import pandas as pd
import xarray as xr

from friezepy.cluster import Quiver
from friezepy.coxeter_conway import ClassicalFrieze
from friezepy.diffeq_polygon import Polygon3
from friezepy.frieze2 import CoefficientRow, closes_at_width, make_window
from friezepy.numeric_core import format_rat, to_rat

PathLike = Union[str, pathlib.Path]


def _rats(values: Iterable) -> List[str]:
    return [format_rat(v) for v in values]


def frieze_to_json(coeffs: CoefficientRow, closed: Optional[bool] = None) -> str:
    """{"n": .., "coefficients": [..], "closed": ..}"""
    if closed is None:
        closed = closes_at_width(coeffs)
    return json.dumps(
        {"n": coeffs.n, "coefficients": _rats(coeffs.values), "closed": bool(closed)}
    )


def frieze_from_json(text: str) -> CoefficientRow:
    """reads a frieze file, checking the declared period"""
    data = json.loads(text)
    coeffs = CoefficientRow.from_values([to_rat(str(v)) for v in data["coefficients"]])
    if "n" in data and int(data["n"]) != coeffs.n:
        raise ValueError(f"declared n={data['n']} but {len(coeffs.values)} coefficients")
    return coeffs


def load_frieze(filename: PathLike) -> CoefficientRow:
    return frieze_from_json(pathlib.Path(filename).read_text())


def save_frieze(coeffs: CoefficientRow, filename: PathLike):
    pathlib.Path(filename).write_text(frieze_to_json(coeffs) + "\n")


def polygon_to_json(poly: Polygon3) -> str:
    """{"n": .., "vertices": [[x, y, z], ..]}"""
    return json.dumps({"n": poly.n, "vertices": [_rats(v) for v in poly.vertices]})


def polygon_from_json(text: str) -> Polygon3:
    data = json.loads(text)
    vertices = [[to_rat(str(x)) for x in v] for v in data["vertices"]]
    return Polygon3.from_vertices(vertices)


def points_from_json(text: str) -> np.ndarray:
    """homogeneous float triples for lifting: {"points": [[x, y, z], ..]}

    Rational strings are accepted as well as numbers.
    """
    data = json.loads(text)
    points = data.get("points", data.get("vertices"))
    return np.array([[float(Fraction(str(x))) for x in p] for p in points])


def quiver_to_json(q: Quiver, values: Optional[Sequence] = None) -> str:
    """{"size": N, "arrows": [[i, j, mult], ..]} plus "values" for a seed"""
    data = {"size": q.size, "arrows": [list(a) for a in q.arrows()]}
    if values is not None:
        data["values"] = _rats(values)
    return json.dumps(data)


def quiver_from_json(text: str) -> Tuple[Quiver, Optional[Tuple[Fraction, ...]]]:
    """returns (quiver, values), values is None for a bare quiver"""
    data = json.loads(text)
    quiver = Quiver.from_arrows(int(data["size"]), data["arrows"])
    values = data.get("values")
    if values is not None:
        values = tuple(to_rat(str(v)) for v in values)
    return quiver, values


def quiddity_to_json(q: ClassicalFrieze) -> str:
    return json.dumps({"n": q.n, "quiddity": _rats(q.quiddity)})


def quiddity_from_json(text: str) -> ClassicalFrieze:
    data = json.loads(text)
    return ClassicalFrieze.from_values([to_rat(str(c)) for c in data["quiddity"]])


def write_tuples(tuples: Iterable[Sequence[int]], stream: IO[str]):
    """one JSON array per line, sorted"""
    for t in sorted(tuple(t) for t in tuples):
        stream.write(json.dumps(list(t)) + "\n")


def read_tuples(stream: Iterable[str]) -> Set[Tuple[int, ...]]:
    return {tuple(int(x) for x in json.loads(line)) for line in stream if line.strip()}


def window_to_frame(ds: xr.Dataset) -> pd.DataFrame:
    """entries as strings, rows top to bottom, one column per window column"""
    values = ds["v"].values
    frame = pd.DataFrame(
        [["" if v is None else format_rat(v) for v in row] for row in values],
        columns=[str(int(c)) for c in ds["col"].values],
    )
    return frame


def window_to_csv(ds: xr.Dataset) -> str:
    """CSV of a window: a header of column labels, then one line per row"""
    return window_to_frame(ds).to_csv(index=False, lineterminator="\n")


def window_from_csv(text: str, n: int, top: int = 0, **attrs) -> xr.Dataset:
    """reads :func:`window_to_csv` output back; row labels start at top"""
    frame = pd.read_csv(_io.StringIO(text), dtype=str, keep_default_na=False)
    cols = [int(c) for c in frame.columns]
    values = np.empty(frame.shape, dtype=object)
    for a, row in enumerate(frame.itertuples(index=False)):
        for b, x in enumerate(row):
            values[a, b] = to_rat(x) if x != "" else None
    return make_window(values, range(top, top + len(frame)), cols, n, **attrs)


def window_to_json(ds: xr.Dataset) -> str:
    """entries keyed by the doubled index "p,q" with p = col + row, q = col - row"""
    entries = {}
    for a, r in enumerate(ds["row"].values):
        for b, c in enumerate(ds["col"].values):
            v = ds["v"].values[a, b]
            entries[f"{int(c + r)},{int(c - r)}"] = None if v is None else format_rat(v)
    attrs = {k: ds.attrs.get(k) for k in ("n", "kind", "closed", "periodic", "boundary")}
    attrs["boundary"] = list(attrs["boundary"] or ())
    coefficients = ds.attrs.get("coefficients")
    attrs["coefficients"] = None if coefficients is None else list(coefficients)
    return json.dumps({**attrs, "entries": entries}, sort_keys=True)


def window_from_json(text: str) -> xr.Dataset:
    data = json.loads(text)
    cells = {}
    for key, value in data["entries"].items():
        p, q = (int(x) for x in key.split(","))
        cells[((p - q) // 2, (p + q) // 2)] = None if value is None else to_rat(value)
    rows = sorted({r for r, _ in cells})
    cols = sorted({c for _, c in cells})
    values = np.empty((len(rows), len(cols)), dtype=object)
    for a, r in enumerate(rows):
        for b, c in enumerate(cols):
            values[a, b] = cells.get((r, c))
    return make_window(
        values,
        rows,
        cols,
        int(data["n"]),
        kind=data.get("kind", "2frieze"),
        coefficients=data.get("coefficients"),
        closed=bool(data.get("closed", False)),
        periodic=bool(data.get("periodic", True)),
        boundary=tuple(data.get("boundary", (1, 0, 0))),
    )
