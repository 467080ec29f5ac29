"""
rieszkit.numeric.sturm - Sturm sequences and real root isolation.

Intervals are half-open ``(lo, hi]`` so that adjacent intervals tile without
overlap. Isolation is plain bisection driven by sign-variation counts.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from ..exceptions import DomainError
from .polynomial import Polynomial, poly_squarefree
from .rational import RationalLike, as_rational

__all__ = (
    "sturm_sequence",
    "sign_variations",
    "count_roots",
    "count_roots_in",
    "root_bound",
    "isolate_roots",
    "isolate_all_roots",
)

logger = logging.getLogger(__name__)


def sturm_sequence(p: Polynomial) -> tuple[Polynomial, ...]:
    """Sturm chain of *p*; members are rescaled by positive factors only."""
    if p.is_zero():
        raise DomainError("zero input")
    seq = [p.positive_primitive()]
    nxt = p.derivative().positive_primitive()
    while not nxt.is_zero():
        seq.append(nxt)
        nxt = (-(seq[-2] % seq[-1])).positive_primitive()
    return tuple(seq)


def sign_variations(seq: Sequence[Polynomial], x: RationalLike) -> int:
    """Number of sign changes of ``seq`` evaluated at *x*, zeros skipped."""
    x = as_rational(x)
    changes = 0
    last = 0
    for p in seq:
        v = p(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


def count_roots(p: Polynomial, lo: RationalLike, hi: RationalLike) -> int:
    """Number of distinct real roots of *p* in ``(lo, hi]``."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo >= hi:
        return 0
    seq = sturm_sequence(poly_squarefree(p))
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def count_roots_in(seq: Sequence[Polynomial], lo: Fraction, hi: Fraction) -> int:
    """Root count in ``(lo, hi]`` from a precomputed Sturm chain."""
    if lo >= hi:
        return 0
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: every real root lies in ``(-B, B)``."""
    if p.is_zero():
        raise DomainError("zero input")
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_roots(p: Polynomial, lo: RationalLike, hi: RationalLike) -> list:
    """One :class:`AlgebraicReal` per distinct root of *p* in ``(lo, hi]``, ascending."""
    from .algebraic import AlgebraicReal

    if p.is_zero():
        raise DomainError("zero input")
    lo, hi = as_rational(lo), as_rational(hi)
    if lo >= hi:
        raise DomainError("Empty isolation interval", lo=lo, hi=hi)
    q = poly_squarefree(p)
    if q.degree < 1:
        return []
    seq = sturm_sequence(q)
    roots: list[AlgebraicReal] = []
    stack = [(lo, hi, sign_variations(seq, lo), sign_variations(seq, hi))]
    bisections = 0
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            roots.append(AlgebraicReal.from_isolation(q, a, b))
            continue
        m = (a + b) / 2
        vm = sign_variations(seq, m)
        bisections += 1
        # right half first so that the left half is popped next
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    logger.debug(
        "isolated %d roots of degree-%d polynomial on (%s, %s] with %d bisections",
        len(roots),
        q.degree,
        lo,
        hi,
        bisections,
    )
    return roots


def isolate_all_roots(p: Polynomial) -> list:
    """Every distinct real root of *p*, ascending."""
    bound = root_bound(p)
    return isolate_roots(p, -bound, bound)
