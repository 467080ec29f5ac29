"""Exact rationals: coercion, text form and signs.

The kernel uses :class:`fractions.Fraction` throughout; this module only adds
the text conventions (``p/q``) shared by every file format.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Union

from ..exceptions import ParseError

__all__ = (
    "Rational",
    "RationalLike",
    "Sign",
    "Ordering",
    "as_rational",
    "parse_rational",
    "format_rational",
    "sign_of",
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class Sign(Enum):
    """Exact sign of a value."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class Ordering(Enum):
    """Result of an exact three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def sign_of(value: Fraction | int) -> Sign:
    if value > 0:
        return Sign.POSITIVE
    if value < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (q > 0) into a Fraction."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError("Not a rational literal", source=text)
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ParseError("Zero denominator", source=text)
    return Fraction(int(num), int(den) if den is not None else 1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings; floats are rejected."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
