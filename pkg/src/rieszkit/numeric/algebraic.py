"""
rieszkit.numeric.algebraic - Real algebraic numbers.

An :class:`AlgebraicReal` is a square-free primitive defining polynomial plus a
rational isolating interval ``(lo, hi]`` holding exactly one of its roots.
Rational values take a fast path: ``lo == hi == value`` and the defining
polynomial is linear. All comparisons are exact; interval width is never
used to decide equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from ..exceptions import DomainError, ParseError
from .polynomial import Polynomial, poly_gcd, poly_squarefree
from .rational import (
    Ordering,
    RationalLike,
    Sign,
    as_rational,
    format_rational,
    parse_rational,
    sign_of,
)
from .sturm import count_roots, count_roots_in, sturm_sequence

__all__ = (
    "AlgebraicReal",
    "alg_compare",
    "alg_sign_at",
    "alg_refine",
    "rational_between",
    "alg_affine_preimage",
)

# Rational detection bisects below 1/lc(P); skip it for huge leading coefficients.
_RATIONAL_PROBE_BITS = 256

_ALG_RE = re.compile(
    r"^\s*alg\s*\{\s*poly\s*=\s*\[(?P<poly>[^\]]*)\]\s*,\s*lo\s*=\s*(?P<lo>[^,}]+?)\s*,"
    r"\s*hi\s*=\s*(?P<hi>[^,}]+?)\s*\}\s*$"
)


@total_ordering
@dataclass(frozen=True, eq=False)
class AlgebraicReal:
    """Exact real algebraic number."""

    defining: Polynomial
    lo: Fraction
    hi: Fraction
    rational: Fraction | None = None

    # ---------------------------------------------------------------- builders
    @classmethod
    def from_rational(cls, value: RationalLike) -> AlgebraicReal:
        value = as_rational(value)
        return cls(Polynomial((-value, 1)), value, value, value)

    @classmethod
    def from_isolation(
        cls, p: Polynomial, lo: RationalLike, hi: RationalLike
    ) -> AlgebraicReal:
        """Build from a polynomial with exactly one root in ``(lo, hi]``.

        The polynomial is made square-free and primitive first.
        """
        lo, hi = as_rational(lo), as_rational(hi)
        if lo >= hi:
            raise DomainError("Isolating interval must satisfy lo < hi", lo=lo, hi=hi)
        q = poly_squarefree(p)
        if q(hi) == 0:
            return cls.from_rational(hi)
        value = cls(q, lo, hi)
        return value._detect_rational()

    @classmethod
    def parse(cls, text: str) -> AlgebraicReal:
        """Parse ``alg{poly=[c0,...], lo=a, hi=b}`` or a plain rational."""
        match = _ALG_RE.match(text)
        if not match:
            return cls.from_rational(parse_rational(text))
        body = match.group("poly").strip()
        coeffs = [parse_rational(c) for c in body.split(",")] if body else []
        poly = Polynomial(coeffs)
        lo, hi = parse_rational(match.group("lo")), parse_rational(match.group("hi"))
        if poly.is_zero() or lo >= hi or count_roots(poly, lo, hi) != 1:
            raise ParseError("alg literal does not isolate exactly one root", source=text)
        return cls.from_isolation(poly, lo, hi)

    # ---------------------------------------------------------------- queries
    @property
    def is_rational(self) -> bool:
        return self.rational is not None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_text(self) -> str:
        if self.rational is not None:
            return format_rational(self.rational)
        coeffs = ", ".join(format_rational(c) for c in self.defining.coeffs)
        lo, hi = format_rational(self.lo), format_rational(self.hi)
        return f"alg{{poly=[{coeffs}], lo={lo}, hi={hi}}}"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"AlgebraicReal({self.to_text()!r})"

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return alg_compare(self, other) is Ordering.EQUAL

    def __lt__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return alg_compare(self, other) is Ordering.LESS

    __hash__ = None  # equal values may carry different representations

    # ---------------------------------------------------------------- internals
    def _bisect(self) -> AlgebraicReal:
        """Halve the isolating interval; keeps the represented value."""
        if self.rational is not None:
            return self
        m = (self.lo + self.hi) / 2
        vm = self.defining(m)
        if vm == 0:
            return AlgebraicReal.from_rational(m)
        vh = self.defining(self.hi)
        if (vm > 0) != (vh > 0):
            return AlgebraicReal(self.defining, m, self.hi)
        return AlgebraicReal(self.defining, self.lo, m)

    def _detect_rational(self) -> AlgebraicReal:
        """Switch to the rational fast path when the root is rational.

        Any rational root of the primitive integer form P is k/lc(P) for an
        integer k; below width 1/lc(P) there is a single candidate.
        """
        P = self.defining.primitive()
        lead = P.leading.numerator
        if lead.bit_length() > _RATIONAL_PROBE_BITS:
            return self
        if P.degree == 1:
            return AlgebraicReal.from_rational(-P.coeffs[0] / P.coeffs[1])
        step = Fraction(1, lead)
        current = self
        while current.rational is None and current.width >= step:
            current = current._bisect()
        if current.rational is not None:
            return current
        candidate = Fraction((current.hi.numerator * lead) // current.hi.denominator, lead)
        if current.lo < candidate <= current.hi and P(candidate) == 0:
            return AlgebraicReal.from_rational(candidate)
        return current


def _coerce(value: object) -> AlgebraicReal | None:
    if isinstance(value, AlgebraicReal):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return AlgebraicReal.from_rational(value)
    return None


def _compare_with_rational(a: AlgebraicReal, r: Fraction) -> Ordering:
    """Order of *a* relative to the rational *r*."""
    while True:
        if a.rational is not None:
            return _cmp(a.rational, r)
        if r <= a.lo:
            return Ordering.GREATER
        if r >= a.hi:
            # a != hi off the fast path
            return Ordering.LESS
        if a.defining(r) == 0:
            return Ordering.EQUAL
        a = a._bisect()


def _cmp(x: Fraction, y: Fraction) -> Ordering:
    if x < y:
        return Ordering.LESS
    if x > y:
        return Ordering.GREATER
    return Ordering.EQUAL


def _flip(o: Ordering) -> Ordering:
    return Ordering(-o.value)


def alg_compare(a: AlgebraicReal, b: AlgebraicReal) -> Ordering:
    """Exact three-way comparison of two algebraic reals."""
    if a.rational is not None and b.rational is not None:
        return _cmp(a.rational, b.rational)
    if b.rational is not None:
        return _compare_with_rational(a, b.rational)
    if a.rational is not None:
        return _flip(_compare_with_rational(b, a.rational))
    shared_chain: tuple[Polynomial, ...] | None = None
    while True:
        if a.rational is not None or b.rational is not None:
            return alg_compare(a, b)
        if a.hi <= b.lo:
            return Ordering.LESS
        if b.hi <= a.lo:
            return Ordering.GREATER
        if shared_chain is None:
            shared = poly_gcd(a.defining, b.defining)
            shared_chain = sturm_sequence(shared) if shared.degree >= 1 else ()
        if shared_chain:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            # a root of the gcd in the overlap is the unique root of both
            if count_roots_in(shared_chain, lo, hi) > 0:
                return Ordering.EQUAL
        a, b = a._bisect(), b._bisect()


def alg_sign_at(p: Polynomial, a: AlgebraicReal) -> Sign:
    """Exact sign of ``p(a)``."""
    if p.is_zero():
        return Sign.ZERO
    if a.rational is not None:
        return sign_of(p(a.rational))
    shared = poly_gcd(p, a.defining)
    if shared.degree >= 1 and count_roots(shared, a.lo, a.hi) > 0:
        return Sign.ZERO
    chain = sturm_sequence(poly_squarefree(p))
    while count_roots_in(chain, a.lo, a.hi) > 0:
        a = a._bisect()
        if a.rational is not None:
            return sign_of(p(a.rational))
    return sign_of(p(a.hi))


def alg_refine(a: AlgebraicReal, width: RationalLike) -> AlgebraicReal:
    """Same value with an isolating interval no wider than *width*."""
    width = as_rational(width)
    if width <= 0:
        raise DomainError("Refinement width must be positive", width=width)
    while a.rational is None and a.width > width:
        a = a._bisect()
    return a


def rational_between(a: AlgebraicReal, b: AlgebraicReal) -> Fraction:
    """A rational strictly between ``a < b``."""
    if alg_compare(a, b) is not Ordering.LESS:
        raise DomainError("rational_between requires a < b", a=a.to_text(), b=b.to_text())
    while True:
        upper = a.rational if a.rational is not None else a.hi
        lower = b.rational if b.rational is not None else b.lo
        if upper < lower:
            return (upper + lower) / 2
        a, b = a._bisect(), b._bisect()


def alg_affine_preimage(a: AlgebraicReal, alpha: RationalLike, beta: RationalLike) -> AlgebraicReal:
    """The algebraic real ``t`` with ``alpha*t + beta == a`` (``alpha > 0``)."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha <= 0:
        raise DomainError("Affine preimage needs a positive slope", alpha=alpha)
    if a.rational is not None:
        return AlgebraicReal.from_rational((a.rational - beta) / alpha)
    pulled = a.defining.compose(Polynomial((beta, alpha))).primitive()
    return AlgebraicReal(pulled, (a.lo - beta) / alpha, (a.hi - beta) / alpha)
