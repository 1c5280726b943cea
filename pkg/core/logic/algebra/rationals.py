"""
Exact rational plumbing.

All grading data in this package is held as ``fractions.Fraction``. This module
parses the wire format (``"p/q"`` or ``"p"``), formats values canonically and
provides the annotated ``Rational`` type used by every pydantic model.
"""

import math
import re
from fractions import Fraction
from typing import Annotated, Iterable

from pydantic import PlainSerializer, PlainValidator, WithJsonSchema

from core.constants import INFINITY_TOKEN
from core.logic.errors import InputValidationError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

INFINITY = math.inf


def parse_rational(value) -> Fraction:
    """Parse an exact rational from a string, int or Fraction.

    Floats are rejected: a float has already lost exactness and silently
    converting it would hide that.

    Args:
        value: ``"p/q"``, ``"p"``, an int or a Fraction

    Returns:
        The value as a Fraction in lowest terms

    Raises:
        InputValidationError: If the value is not an exact rational
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputValidationError(f"expected a rational, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise InputValidationError(f"malformed rational {value!r}; expected 'p/q' or 'p'")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise InputValidationError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise InputValidationError(f"expected a rational string, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Canonical wire form: lowest terms, positive denominator, no '/1'."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_value(value) -> str:
    """Format a rational or the infinite valuation value."""
    if value == INFINITY:
        return INFINITY_TOKEN
    return format_rational(value)


def denominator_lcm(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators; 1 for an empty iterable."""
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out


def rational_gcd(values: Iterable[Fraction]) -> Fraction:
    """Generator of the subgroup of Q spanned by ``values``.

    For values in lowest terms this is gcd(numerators) / lcm(denominators).

    Raises:
        InputValidationError: If no nonzero value is given
    """
    values = [Fraction(v) for v in values]
    if not any(values):
        raise InputValidationError("gcd needs at least one nonzero rational")
    num = 0
    for v in values:
        num = math.gcd(num, v.numerator)
    return Fraction(num, denominator_lcm(values))


def is_multiple(value: Fraction, step: Fraction) -> bool:
    """True when ``value`` lies in ``step``·Z."""
    return (Fraction(value) / step).denominator == 1


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^[+-]?\d+(/\d+)?$"}),
]
