"""
rieszkit.sampling - Seeded random streams and random inputs.

All randomness flows from one integer seed through named sub-streams, so a
suite or check can be re-run on its own and still see the same inputs.
"""

from __future__ import annotations

import hashlib
import random
from collections.abc import Sequence
from fractions import Fraction

from .expr.ast import Abs, Add, Expr, Gen, Join, Meet, Mul, NegPart, Pos, Scale, const
from .models.vector import Vector
from .numeric import Polynomial
from .pwfun import PiecewiseFunction

__all__ = (
    "substream",
    "random_rational",
    "random_vector",
    "random_pl_function",
    "random_monotone_pl",
    "random_algebra_expr",
    "random_ladder_expr",
)


def substream(seed: int, *names: str | int) -> random.Random:
    """Independent deterministic stream for ``(seed, *names)``."""
    key = ":".join(str(part) for part in (seed, *names)).encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def random_rational(
    rng: random.Random,
    max_num: int = 10,
    max_den: int = 5,
    *,
    nonnegative: bool = False,
) -> Fraction:
    num = rng.randint(0 if nonnegative else -max_num, max_num)
    return Fraction(num, rng.randint(1, max_den))


def random_vector(
    rng: random.Random, dim: int, max_num: int = 10, max_den: int = 5, *, nonnegative: bool = False
) -> Vector:
    return Vector(
        tuple(random_rational(rng, max_num, max_den, nonnegative=nonnegative) for _ in range(dim))
    )


def _sorted_interior(
    rng: random.Random, lo: Fraction, hi: Fraction, count: int, den: int
) -> list[Fraction]:
    """Up to *count* distinct rationals strictly inside ``(lo, hi)``."""
    points = {lo + (hi - lo) * Fraction(rng.randint(1, den - 1), den) for _ in range(count)}
    return sorted(points)


def random_pl_function(
    rng: random.Random,
    domain: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1)),
    max_breaks: int = 5,
    max_num: int = 1000,
    max_den: int = 1000,
) -> PiecewiseFunction:
    """Continuous piecewise-linear function with up to *max_breaks* interior breakpoints."""
    lo, hi = Fraction(domain[0]), Fraction(domain[1])
    knots = [lo, *_sorted_interior(rng, lo, hi, rng.randint(0, max_breaks), 64), hi]
    values = [random_rational(rng, max_num, max_den) for _ in knots]
    pieces = []
    for (x0, y0), (x1, y1) in zip(zip(knots, values), zip(knots[1:], values[1:])):
        slope = (y1 - y0) / (x1 - x0)
        pieces.append(Polynomial.linear(slope, y0 - slope * x0))
    return PiecewiseFunction.from_pieces((lo, hi), knots, pieces)


def random_monotone_pl(
    rng: random.Random,
    domain: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1)),
    max_breaks: int = 3,
) -> PiecewiseFunction:
    """Strictly increasing piecewise-linear map of the domain onto itself."""
    lo, hi = Fraction(domain[0]), Fraction(domain[1])
    inner = _sorted_interior(rng, lo, hi, rng.randint(0, max_breaks), 32)
    images = _sorted_interior(rng, lo, hi, len(inner) * 4 + 4, 32)
    while len(images) < len(inner):  # pragma: no cover - 4x oversampling
        images = _sorted_interior(rng, lo, hi, len(inner) * 8, 256)
    images = sorted(rng.sample(images, len(inner)))
    knots, values = [lo, *inner, hi], [lo, *images, hi]
    pieces = []
    for (x0, y0), (x1, y1) in zip(zip(knots, values), zip(knots[1:], values[1:])):
        slope = (y1 - y0) / (x1 - x0)
        pieces.append(Polynomial.linear(slope, y0 - slope * x0))
    return PiecewiseFunction.from_pieces((lo, hi), knots, pieces)


def _coefficient(rng: random.Random) -> Fraction:
    c = Fraction(0)
    while c == 0:
        c = random_rational(rng, 3, 3)
    return c


def random_algebra_expr(rng: random.Random, generators: Sequence[str], depth: int = 2) -> Expr:
    """Level-1 expression: sums, scalings and products of generators and constants."""
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.8:
            return Gen(rng.choice(list(generators)))
        return const(_coefficient(rng))
    choice = rng.randrange(3)
    left = random_algebra_expr(rng, generators, depth - 1)
    if choice == 0:
        return Scale(_coefficient(rng), left)
    right = random_algebra_expr(rng, generators, depth - 1)
    return Add(left, right) if choice == 1 else Mul(left, right)


def random_ladder_expr(rng: random.Random, generators: Sequence[str], depth: int = 3) -> Expr:
    """Expression in ladder form (products only between level-1 subterms).

    Lattice sugar (pos, negp, meet, join) may appear; it desugars to ladder form.
    """
    if depth <= 1 or rng.random() < 0.2:
        return random_algebra_expr(rng, generators, 1)
    choice = rng.randrange(7)
    sub_expr = random_ladder_expr(rng, generators, depth - 1)
    match choice:
        case 0:
            return Abs(sub_expr)
        case 1:
            return Scale(_coefficient(rng), sub_expr)
        case 2:
            return Pos(sub_expr)
        case 3:
            return NegPart(sub_expr)
    other = random_ladder_expr(rng, generators, depth - 1)
    return {4: Add, 5: Meet, 6: Join}[choice](sub_expr, other)
