# -*- coding: utf-8 -*-
"""
Extends xarray.Dataset with a ``frieze`` accessor for frieze windows.

A window is the Dataset built by :func:`friezepy.frieze2.make_window`:
a single object variable ``v`` of exact Fractions on dims ``row``/``col``.
The accessor reads single entries (wrapping columns, filling the boundary
rows and using periodicity when the window is closed), checks the local
rules and exports the window.

    >>> from friezepy import frieze2
    >>> ds = frieze2.frieze_from_coefficients(row, depth=3)
    >>> ds.frieze.value(1, 4)
    >>> ds.frieze.verify()
    []
"""
try:
    from typing_extensions import Literal
except ImportError:
    from typing import Literal
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import xarray as xr

from friezepy import io as fio
from friezepy.coxeter_conway import cc_verify_rule
from friezepy.frieze2 import (
    CoefficientRow,
    DoubledIndex,
    Sl3Report,
    read_value,
    sl3_subgrids,
    verify_pattern_rule,
)


@xr.register_dataset_accessor("frieze")
class FriezeAccessor(object):
    """extends xarray Dataset with frieze window reads, checks and export"""

    def __init__(self, xarray_obj):
        """
        Arguments:
            xarray_obj : xarray Dataset with variable v on (row, col)

        Shortcuts (properties):
            data.frieze.n
            data.frieze.coefficients
            data.frieze.is_closed

        and methods:
            data.frieze.value(row, col), data.frieze.entry(p, q)
            data.frieze.row(r)
            data.frieze.verify(), data.frieze.sl3()
            data.frieze.to_csv(), data.frieze.to_json()
        """
        self._obj = xarray_obj
        self._coefficients = None

    @property
    def n(self) -> int:
        return int(self._obj.attrs["n"])

    @property
    def kind(self) -> str:
        return self._obj.attrs.get("kind", "2frieze")

    @property
    def is_closed(self) -> bool:
        return bool(self._obj.attrs.get("closed", False))

    @property
    def coefficients(self) -> Optional[CoefficientRow]:
        """the generating row, None for windows that have none"""
        if self.kind == "classical":
            return None
        if self._coefficients is None:  # only first time
            stored = self._obj.attrs.get("coefficients")
            if stored is not None:
                self._coefficients = CoefficientRow.from_values(
                    [Fraction(v) for v in stored]
                )
        return self._coefficients

    def value(self, row: int, col: int) -> Optional[Fraction]:
        """entry at grid position (row, col)

        Raises:
            IndexError: the entry is not recoverable from the window
        """
        return read_value(self._obj, int(row), int(col))

    def entry(self, p: int, q: int) -> Optional[Fraction]:
        """entry v_{p/2, q/2} by its doubled index"""
        index = DoubledIndex(int(p), int(q))
        return self.value(index.row, index.col)

    def row(self, r: int) -> List[Optional[Fraction]]:
        """one row over the stored columns"""
        return [self.value(r, int(c)) for c in self._obj["col"].values]

    def verify(self) -> Union[List[DoubledIndex], List[Tuple[int, int]]]:
        """positions where the local rule of the window fails, empty if none"""
        if self.kind == "classical":
            return cc_verify_rule(self._obj)
        return verify_pattern_rule(self._obj)

    def sl3(self) -> Sl3Report:
        if self.kind == "classical":
            raise ValueError("SL3 subgrids belong to 2-frieze windows")
        return sl3_subgrids(self._obj)

    def to_csv(self) -> str:
        return fio.window_to_csv(self._obj)

    def to_json(self) -> str:
        return fio.window_to_json(self._obj)

    def export(self, fmt: Literal["csv", "json"] = "csv") -> bytes:
        """the window as bytes in one of the two exchange formats"""
        if fmt == "csv":
            return self.to_csv().encode("utf-8")
        if fmt == "json":
            return self.to_json().encode("utf-8")
        raise ValueError(f"unknown window format {fmt!r}")
