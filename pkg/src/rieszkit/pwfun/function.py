"""
rieszkit.pwfun.function - The PiecewiseFunction value type.

A PiecewiseFunction is a continuous function on a rational interval
``[lo, hi]`` given by polynomial pieces between strictly ascending algebraic
breakpoints. Values are kept canonical: adjacent pieces are never the same
polynomial, so equal functions have identical piece lists.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..config import active_budget
from ..exceptions import BudgetError, CarrierMismatchError, DomainError
from ..numeric import AlgebraicReal, Ordering, Polynomial, Sign, alg_compare, alg_sign_at
from ..numeric.rational import RationalLike, as_rational

__all__ = ("PiecewiseFunction", "Domain", "UnitFunction", "unit_function")

Domain = tuple[Fraction, Fraction]


@dataclass(frozen=True, eq=False)
class PiecewiseFunction:
    """Exact continuous piecewise-polynomial function on ``[lo, hi]``."""

    lo: Fraction
    hi: Fraction
    breakpoints: tuple[AlgebraicReal, ...]
    pieces: tuple[Polynomial, ...]

    # ---------------------------------------------------------------- builders
    @classmethod
    def polynomial(
        cls, p: Polynomial, domain: tuple[RationalLike, RationalLike]
    ) -> PiecewiseFunction:
        lo, hi = _domain(domain)
        return cls(lo, hi, (AlgebraicReal.from_rational(lo), AlgebraicReal.from_rational(hi)), (p,))

    @classmethod
    def constant(
        cls, c: RationalLike, domain: tuple[RationalLike, RationalLike]
    ) -> PiecewiseFunction:
        return cls.polynomial(Polynomial.constant(c), domain)

    @classmethod
    def identity(cls, domain: tuple[RationalLike, RationalLike]) -> PiecewiseFunction:
        """The function ``x``."""
        return cls.polynomial(Polynomial.x(), domain)

    @classmethod
    def from_pieces(
        cls,
        domain: tuple[RationalLike, RationalLike],
        breaks: Sequence[AlgebraicReal | RationalLike],
        pieces: Sequence[Polynomial],
    ) -> PiecewiseFunction:
        """Validated constructor: ascending breakpoints, continuity, canonical form."""
        lo, hi = _domain(domain)
        bps = tuple(
            b if isinstance(b, AlgebraicReal) else AlgebraicReal.from_rational(as_rational(b))
            for b in breaks
        )
        if len(bps) != len(pieces) + 1:
            raise DomainError(
                "Need exactly one more breakpoint than pieces",
                breakpoints=len(bps),
                pieces=len(pieces),
            )
        if bps[0] != AlgebraicReal.from_rational(lo) or bps[-1] != AlgebraicReal.from_rational(hi):
            raise DomainError("Breakpoints must start at lo and end at hi", lo=lo, hi=hi)
        for left, right in zip(bps, bps[1:]):
            if alg_compare(left, right) is not Ordering.LESS:
                raise DomainError(
                    "Breakpoints must be strictly ascending",
                    left=left.to_text(),
                    right=right.to_text(),
                )
        for beta, p, q in zip(bps[1:-1], pieces, pieces[1:]):
            if alg_sign_at(p - q, beta) is not Sign.ZERO:
                raise DomainError(
                    "Adjacent pieces disagree at a breakpoint",
                    breakpoint=beta.to_text(),
                    left=str(p),
                    right=str(q),
                )
        return canonical(lo, hi, bps, pieces)

    # ---------------------------------------------------------------- queries
    @property
    def domain(self) -> Domain:
        return (self.lo, self.hi)

    def intervals(self) -> Iterator[tuple[AlgebraicReal, AlgebraicReal, Polynomial]]:
        """Yield ``(left, right, piece)`` for each piece."""
        for i, piece in enumerate(self.pieces):
            yield self.breakpoints[i], self.breakpoints[i + 1], piece

    def is_zero(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0].is_zero()

    @property
    def max_degree(self) -> int:
        return max(p.degree for p in self.pieces)

    def __repr__(self) -> str:
        from .literal import format_pw

        return f"PiecewiseFunction({format_pw(self)!r})"


UnitFunction = PiecewiseFunction


def unit_function(domain: tuple[RationalLike, RationalLike]) -> PiecewiseFunction:
    """The constant-1 function on *domain*."""
    return PiecewiseFunction.constant(1, domain)


def _domain(domain: tuple[RationalLike, RationalLike]) -> Domain:
    lo, hi = as_rational(domain[0]), as_rational(domain[1])
    if lo >= hi:
        raise DomainError("Domain must satisfy a < b", lo=lo, hi=hi)
    return lo, hi


def check_same_domain(f: PiecewiseFunction, g: PiecewiseFunction) -> Domain:
    if f.domain != g.domain:
        raise CarrierMismatchError(
            "Piecewise functions live on different domains",
            left=[str(f.lo), str(f.hi)],
            right=[str(g.lo), str(g.hi)],
        )
    return f.domain


def canonical(
    lo: Fraction,
    hi: Fraction,
    breakpoints: Sequence[AlgebraicReal],
    pieces: Sequence[Polynomial],
) -> PiecewiseFunction:
    """Merge adjacent identical pieces and enforce the piece budget."""
    merged_bps = [breakpoints[0]]
    merged_pieces: list[Polynomial] = []
    for i, piece in enumerate(pieces):
        if merged_pieces and merged_pieces[-1] == piece:
            merged_bps[-1] = breakpoints[i + 1]
            continue
        merged_pieces.append(piece)
        merged_bps.append(breakpoints[i + 1])
    cap = active_budget().piece_cap
    if len(merged_pieces) > cap:
        raise BudgetError(
            "Piecewise function has too many pieces",
            budget="piece_cap",
            limit=cap,
            actual=len(merged_pieces),
        )
    return PiecewiseFunction(lo, hi, tuple(merged_bps), tuple(merged_pieces))
