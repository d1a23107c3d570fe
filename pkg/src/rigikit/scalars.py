"""Scalar modes: exact rational values vs. IEEE doubles.

Every coordinate, matrix entry and stress weight in the package is either a
:class:`fractions.Fraction` (exact mode) or a ``float`` (approximate mode).
The two never mix silently; converting an exact object to floating point is
always an explicit step.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import ExactUnsupportedError

Scalar = Fraction | float


class Mode(enum.Enum):
    EXACT = "exact"
    APPROX = "approx"


def coerce_number(value, mode: Mode) -> Scalar:
    """Coerce a plain numeric value into the given mode.

    Exact mode accepts ``int`` and ``Fraction`` only; a ``float`` has no
    declared rational meaning, so it is rejected rather than reinterpreted.
    """
    if mode is Mode.EXACT:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise ExactUnsupportedError(
                f"exact mode needs int or Fraction values, got {value!r}"
            )
        return Fraction(value)
    if isinstance(value, (int, float, Fraction)) and not isinstance(value, bool):
        return float(value)
    raise ExactUnsupportedError(f"cannot interpret {value!r} as a number")


def scalar_to_float(value: Scalar) -> float:
    return float(value)


def format_scalar(value: Scalar) -> str:
    """Render a scalar as a string that parses back to the same value."""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))
