"""
rieszkit.pwfun.ops - Exact f-algebra operations on piecewise functions.

Sums and products work on the merged breakpoint partition. ``|f|`` splits
every piece at its isolated roots; the lattice operations are derived from
``|.|`` with the usual identities, so no comparison ever uses a tolerance.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from ..exceptions import DomainError
from ..numeric import (
    AlgebraicReal,
    Ordering,
    Polynomial,
    alg_affine_preimage,
    alg_compare,
    isolate_roots,
    rational_between,
)
from ..numeric.rational import RationalLike, as_rational
from .function import PiecewiseFunction, canonical, check_same_domain

__all__ = (
    "pw_add",
    "pw_sub",
    "pw_scale",
    "pw_mul",
    "pw_abs",
    "pw_meet",
    "pw_join",
    "pw_pos",
    "pw_neg",
    "pw_eval",
    "pw_equal",
    "pw_leq",
    "pw_leq_witness",
    "pw_truncate_converges",
    "pw_precompose",
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


# ----------------------------------------------------------------- partition
def _merge(f: PiecewiseFunction, g: PiecewiseFunction):
    """Common refinement: merged breakpoints and per-interval piece pairs."""
    check_same_domain(f, g)
    fb, gb = f.breakpoints, g.breakpoints
    out = [fb[0]]
    pairs: list[tuple[Polynomial, Polynomial]] = []
    ia, ib = 1, 1
    while ia < len(fb) and ib < len(gb):
        pairs.append((f.pieces[ia - 1], g.pieces[ib - 1]))
        order = alg_compare(fb[ia], gb[ib])
        if order is Ordering.LESS:
            out.append(fb[ia])
            ia += 1
        elif order is Ordering.GREATER:
            out.append(gb[ib])
            ib += 1
        else:
            out.append(gb[ib] if gb[ib].is_rational else fb[ia])
            ia += 1
            ib += 1
    return out, pairs


def _combine(f: PiecewiseFunction, g: PiecewiseFunction, op) -> PiecewiseFunction:
    bps, pairs = _merge(f, g)
    return canonical(f.lo, f.hi, bps, [op(p, q) for p, q in pairs])


def _lower(a: AlgebraicReal) -> Fraction:
    return a.rational if a.rational is not None else a.lo


def _upper(a: AlgebraicReal) -> Fraction:
    return a.rational if a.rational is not None else a.hi


def _sign_runs(left: AlgebraicReal, right: AlgebraicReal, p: Polynomial):
    """Split ``(left, right)`` at the roots of *p*; yield ``(a, b, sign, probe)``.

    ``sign`` is the sign of *p* on the open run ``(a, b)`` and ``probe`` a
    rational point inside it.
    """
    if p.is_zero():
        yield left, right, 0, rational_between(left, right)
        return
    points = [left]
    if p.degree >= 1:
        for root in isolate_roots(p, _lower(left), _upper(right)):
            inside = alg_compare(left, root) is Ordering.LESS
            if inside and alg_compare(root, right) is Ordering.LESS:
                points.append(root)
    points.append(right)
    for a, b in zip(points, points[1:]):
        probe = rational_between(a, b)
        value = p(probe)
        yield a, b, (value > 0) - (value < 0), probe


# ---------------------------------------------------------------- arithmetic
def pw_add(f: PiecewiseFunction, g: PiecewiseFunction) -> PiecewiseFunction:
    return _combine(f, g, lambda p, q: p + q)


def pw_sub(f: PiecewiseFunction, g: PiecewiseFunction) -> PiecewiseFunction:
    return _combine(f, g, lambda p, q: p - q)


def pw_scale(c: RationalLike, f: PiecewiseFunction) -> PiecewiseFunction:
    c = as_rational(c)
    return canonical(f.lo, f.hi, f.breakpoints, [p.scale(c) for p in f.pieces])


def pw_mul(f: PiecewiseFunction, g: PiecewiseFunction) -> PiecewiseFunction:
    return _combine(f, g, lambda p, q: p * q)


# ------------------------------------------------------------------- lattice
def pw_abs(f: PiecewiseFunction) -> PiecewiseFunction:
    """Pointwise ``|f|``; new breakpoints sit exactly at sign changes."""
    bps = [f.breakpoints[0]]
    pieces: list[Polynomial] = []
    for left, right, p in f.intervals():
        for _, b, sign, _ in _sign_runs(left, right, p):
            pieces.append(-p if sign < 0 else p)
            bps.append(b)
    return canonical(f.lo, f.hi, bps, pieces)


def pw_pos(f: PiecewiseFunction) -> PiecewiseFunction:
    """``f⁺ = f ∨ 0``."""
    return pw_scale(HALF, pw_add(f, pw_abs(f)))


def pw_neg(f: PiecewiseFunction) -> PiecewiseFunction:
    """``f⁻ = (-f) ∨ 0``."""
    return pw_scale(HALF, pw_sub(pw_abs(f), f))


def pw_meet(f: PiecewiseFunction, g: PiecewiseFunction) -> PiecewiseFunction:
    return pw_scale(HALF, pw_sub(pw_add(f, g), pw_abs(pw_sub(f, g))))


def pw_join(f: PiecewiseFunction, g: PiecewiseFunction) -> PiecewiseFunction:
    return pw_scale(HALF, pw_add(pw_add(f, g), pw_abs(pw_sub(f, g))))


# ------------------------------------------------------------------- queries
def pw_eval(f: PiecewiseFunction, x: RationalLike) -> Fraction:
    """Exact ``f(x)`` for ``lo ≤ x ≤ hi``."""
    x = as_rational(x)
    if not f.lo <= x <= f.hi:
        raise DomainError("Point outside the function's domain", x=x, lo=f.lo, hi=f.hi)
    point = AlgebraicReal.from_rational(x)
    for _, right, p in f.intervals():
        if alg_compare(point, right) is not Ordering.GREATER:
            return p(x)
    return f.pieces[-1](x)  # pragma: no cover - x ≤ hi always matches


def pw_equal(f: PiecewiseFunction, g: PiecewiseFunction) -> bool:
    """Exact pointwise equality."""
    return pw_sub(f, g).is_zero()


def pw_leq_witness(f: PiecewiseFunction, g: PiecewiseFunction) -> Fraction | None:
    """A rational point where ``f > g``, or None when ``f ≤ g`` everywhere.

    ``g - f`` is continuous, so a negative value anywhere means a negative
    value on an open run between consecutive roots.
    """
    diff = pw_sub(g, f)
    for left, right, p in diff.intervals():
        for _, _, sign, probe in _sign_runs(left, right, p):
            if sign < 0:
                return probe
    return None


def pw_leq(f: PiecewiseFunction, g: PiecewiseFunction) -> bool:
    return pw_leq_witness(f, g) is None


def pw_truncate_converges(f: PiecewiseFunction, unit: PiecewiseFunction) -> int:
    """Least N with ``f ∧ N·e = f`` for ``f ≥ 0``.

    Doubling search finds a power of two that works, bisection then narrows
    it to the least integer. The zero function returns 0.
    """
    check_same_domain(f, unit)
    zero = pw_scale(0, f)
    if not pw_leq(zero, f):
        raise DomainError("Truncation needs a positive function", witness=pw_leq_witness(zero, f))

    def truncates(n: int) -> bool:
        return pw_equal(pw_meet(f, pw_scale(n, unit)), f)

    if truncates(0):
        return 0
    high = 1
    while not truncates(high):
        high *= 2
    low = high // 2  # fails (or is 0, which failed above)
    while high - low > 1:
        mid = (low + high) // 2
        if truncates(mid):
            high = mid
        else:
            low = mid
    logger.debug("truncation of %r converges at N=%d", f, high)
    return high


# ------------------------------------------------------------ reparameterize
def pw_precompose(f: PiecewiseFunction, phi: PiecewiseFunction) -> PiecewiseFunction:
    """``f ∘ φ`` for a strictly increasing piecewise-linear φ onto f's domain.

    φ must have rational breakpoints, linear pieces with positive slope,
    ``φ(c) = lo`` and ``φ(d) = hi`` where ``[c, d]`` is φ's own domain.
    """
    if any(not b.is_rational for b in phi.breakpoints):
        raise DomainError("Reparameterization needs rational breakpoints")
    if any(p.degree > 1 or p.degree < 1 or p.coeffs[1] <= 0 for p in phi.pieces):
        raise DomainError("Reparameterization must be strictly increasing and piecewise linear")
    if phi.pieces[0](phi.lo) != f.lo or phi.pieces[-1](phi.hi) != f.hi:
        raise DomainError("Reparameterization must map onto the function's domain")

    bps = [AlgebraicReal.from_rational(phi.lo)]
    pieces: list[Polynomial] = []
    for t_left, t_right, psi in phi.intervals():
        alpha, beta = psi.coeffs[1], psi.coeffs[0]
        s_left = AlgebraicReal.from_rational(psi(t_left.rational))
        s_right = AlgebraicReal.from_rational(psi(t_right.rational))
        for b_left, b_right, p in f.intervals():
            left = b_left if alg_compare(b_left, s_left) is Ordering.GREATER else s_left
            right = b_right if alg_compare(b_right, s_right) is Ordering.LESS else s_right
            if alg_compare(left, right) is not Ordering.LESS:
                continue
            pieces.append(p.compose(psi))
            bps.append(alg_affine_preimage(right, alpha, beta))
    return canonical(phi.lo, phi.hi, bps, pieces)
