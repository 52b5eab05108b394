# -*- coding: utf-8 -*-

"""
Exceptions raised by friezepy. All of them are ValueErrors so that callers
catching bad input in the usual way keep working.
"""

from typing import Any, Optional


class FriezeError(ValueError):
    """base class of the domain errors, the CLI maps them to exit code 1"""


class NotClosedError(FriezeError):
    """the coefficient row does not give a closed frieze

    The offending monodromy matrix (when known) is kept on ``.monodromy``.
    """

    def __init__(self, message: str, monodromy: Optional[Any] = None):
        super().__init__(message)
        self.monodromy = monodromy


class ChartBoundaryError(FriezeError):
    """a division by zero met while completing a chart or mutating a seed"""

    def __init__(self, message: str, position: Optional[Any] = None):
        super().__init__(message)
        self.position = position


class DegeneracyError(FriezeError):
    """singular triple of vectors, or collinear projective points"""


class UnimodularityError(FriezeError):
    """consecutive vertices do not have determinant one"""


class NotInvertibleError(FriezeError):
    """the cyclic lifting system is singular (3 divides n)"""


class NotArithmeticError(FriezeError):
    """a closed frieze with an entry that is not a positive integer"""
