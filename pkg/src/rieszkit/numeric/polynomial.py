"""
rieszkit.numeric.polynomial - Univariate polynomials over the rationals.

Coefficients are stored in ascending degree order with no trailing zeros, so
``Polynomial(())`` is the zero polynomial. Every construction is checked
against the active :class:`~rieszkit.config.Budget`.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from fractions import Fraction
from math import gcd, lcm

from ..config import active_budget
from ..exceptions import BudgetError, DomainError, ParseError
from .rational import RationalLike, Sign, as_rational, format_rational, parse_rational, sign_of

__all__ = ("Polynomial", "poly_eval", "poly_squarefree", "poly_gcd")

_POLY_RE = re.compile(r"^\s*poly\s*\[(.*)\]\s*$", re.DOTALL)


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _check_budget(coeffs: tuple[Fraction, ...]) -> None:
    budget = active_budget()
    degree = len(coeffs) - 1
    if degree > budget.degree_cap:
        raise BudgetError(
            "Polynomial degree exceeds cap",
            budget="degree_cap",
            limit=budget.degree_cap,
            actual=degree,
        )
    bits = max(
        (max(c.numerator.bit_length(), c.denominator.bit_length()) for c in coeffs),
        default=0,
    )
    if bits > budget.bits_cap:
        raise BudgetError(
            "Coefficient bit-length exceeds cap",
            budget="bits_cap",
            limit=budget.bits_cap,
            actual=bits,
        )


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        trimmed = _trim(as_rational(c) for c in coeffs)
        _check_budget(trimmed)
        object.__setattr__(self, "coeffs", trimmed)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # ---------------------------------------------------------------- builders
    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def linear(cls, slope: RationalLike, intercept: RationalLike) -> Polynomial:
        """``slope*x + intercept``."""
        return cls((intercept, slope))

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> Polynomial:
        out = cls.constant(1)
        for r in roots:
            out = out * cls((-as_rational(r), 1))
        return out

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """Parse the ``poly[c0, c1, ..., cd]`` text form."""
        match = _POLY_RE.match(text)
        if not match:
            raise ParseError("Expected poly[c0, ..., cd]", source=text)
        body = match.group(1).strip()
        if not body:
            return cls(())
        return cls(parse_rational(part) for part in body.split(","))

    # ---------------------------------------------------------------- queries
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: RationalLike) -> Sign:
        return sign_of(self(x))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __str__(self) -> str:
        return "poly[" + ", ".join(format_rational(c) for c in self.coeffs) + "]"

    # ------------------------------------------------------------- arithmetic
    def __add__(self, other: Polynomial | RationalLike) -> Polynomial:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | RationalLike) -> Polynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: RationalLike) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other: Polynomial | RationalLike) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> Polynomial:
        c = as_rational(c)
        return Polynomial(c * x for x in self.coeffs)

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("Negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(()), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            factor = rem[k + other.degree] / lead
            quot[k] = factor
            if factor == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= factor * b
        return Polynomial(quot), Polynomial(rem[: other.degree])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def compose(self, inner: Polynomial) -> Polynomial:
        """Return ``self(inner(x))``."""
        acc = Polynomial(())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    # ------------------------------------------------------------- normal forms
    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def primitive(self) -> Polynomial:
        """Integer coefficients with content 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        content = gcd(*ints)
        if ints[-1] < 0:
            content = -content
        return Polynomial(Fraction(v // content) for v in ints)

    def positive_primitive(self) -> Polynomial:
        """Like :meth:`primitive` but only ever scaled by a positive factor."""
        p = self.primitive()
        if p.is_zero() or (p.leading > 0) == (self.leading > 0):
            return p
        return -p


def _coerce(value: Polynomial | RationalLike) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Exact value ``p(x)``."""
    return p(x)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive gcd of *p* and *q* (zero only when both are zero).

    Remainders are made primitive at every step to keep coefficients small.
    """
    a, b = p.primitive(), q.primitive()
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.primitive()


def poly_squarefree(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')`` in primitive form: same real roots, all simple."""
    if p.is_zero():
        raise DomainError("zero input")
    if p.degree == 0:
        return Polynomial.constant(1)
    g = poly_gcd(p, p.derivative())
    return (p // g).primitive()
