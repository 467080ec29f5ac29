"""
rieszkit.tensor.separable - Separable sums ``Σ fᵢ ⊗ gᵢ`` of piecewise functions.

A tensor is a list of factor pairs over fixed X and Y domains; its value at
``(x, y)`` is ``Σ fᵢ(x)·gᵢ(y)``. There is no canonical form: two tensors
with equal values may have different term lists.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..config import active_budget
from ..exceptions import BudgetError, CarrierMismatchError, DomainError
from ..models import GridFunction
from ..numeric.rational import RationalLike, as_rational
from ..pwfun import PiecewiseFunction, pw_eval, pw_mul, pw_scale, unit_function
from ..pwfun.function import Domain

__all__ = (
    "SeparableTensor",
    "tensor_add",
    "tensor_scale",
    "tensor_mul",
    "tensor_eval",
    "to_grid",
)

Term = tuple[PiecewiseFunction, PiecewiseFunction]


@dataclass(frozen=True)
class SeparableTensor:
    xdomain: Domain
    ydomain: Domain
    terms: tuple[Term, ...] = ()

    @classmethod
    def of(cls, xdomain: Domain, ydomain: Domain, terms: Iterable[Term] = ()) -> SeparableTensor:
        """Checked constructor: domains must match and terms with a zero factor are dropped."""
        kept: list[Term] = []
        for fx, fy in terms:
            if fx.domain != xdomain or fy.domain != ydomain:
                raise CarrierMismatchError(
                    "Tensor factor on the wrong domain",
                    left=str((xdomain, ydomain)),
                    right=str((fx.domain, fy.domain)),
                )
            if not (fx.is_zero() or fy.is_zero()):
                kept.append((fx, fy))
        budget = active_budget()
        if len(kept) > budget.term_cap:
            raise BudgetError(
                "Tensor term count exceeds the cap",
                budget="term_cap",
                limit=budget.term_cap,
                actual=len(kept),
            )
        return cls(xdomain, ydomain, tuple(kept))

    @classmethod
    def simple(cls, fx: PiecewiseFunction, fy: PiecewiseFunction) -> SeparableTensor:
        """``fx ⊗ fy``."""
        return cls.of(fx.domain, fy.domain, [(fx, fy)])

    @classmethod
    def zero(cls, xdomain: Domain, ydomain: Domain) -> SeparableTensor:
        return cls(xdomain, ydomain, ())

    @classmethod
    def unit(cls, xdomain: Domain, ydomain: Domain) -> SeparableTensor:
        """``1 ⊗ 1``."""
        return cls.simple(unit_function(xdomain), unit_function(ydomain))

    @property
    def carrier(self) -> tuple[Domain, Domain]:
        return self.xdomain, self.ydomain

    def __len__(self) -> int:
        return len(self.terms)


def _check_domains(u: SeparableTensor, v: SeparableTensor) -> None:
    if u.carrier != v.carrier:
        raise CarrierMismatchError(
            "Tensors live on different domains", left=str(u.carrier), right=str(v.carrier)
        )


def tensor_add(u: SeparableTensor, v: SeparableTensor) -> SeparableTensor:
    _check_domains(u, v)
    return SeparableTensor.of(u.xdomain, u.ydomain, u.terms + v.terms)


def tensor_scale(c: RationalLike, u: SeparableTensor) -> SeparableTensor:
    c = as_rational(c)
    return SeparableTensor.of(u.xdomain, u.ydomain, ((pw_scale(c, fx), fy) for fx, fy in u.terms))


def tensor_mul(u: SeparableTensor, v: SeparableTensor) -> SeparableTensor:
    """``(a ⊗ b)·(a' ⊗ b') = aa' ⊗ bb'`` extended bilinearly."""
    _check_domains(u, v)
    budget = active_budget()
    count = len(u) * len(v)
    if count > budget.term_cap:
        raise BudgetError(
            "Tensor product would exceed the term cap",
            budget="term_cap",
            limit=budget.term_cap,
            actual=count,
        )
    return SeparableTensor.of(
        u.xdomain,
        u.ydomain,
        ((pw_mul(a, c), pw_mul(b, d)) for (a, b), (c, d) in itertools.product(u.terms, v.terms)),
    )


def _check_point(u: SeparableTensor, x: Fraction, y: Fraction) -> None:
    (xlo, xhi), (ylo, yhi) = u.carrier
    if not (xlo <= x <= xhi and ylo <= y <= yhi):
        raise DomainError(
            "Point outside the tensor's domain", x=x, y=y, xdomain=[xlo, xhi], ydomain=[ylo, yhi]
        )


def tensor_eval(u: SeparableTensor, x: RationalLike, y: RationalLike) -> Fraction:
    """Exact ``Σ fᵢ(x)·gᵢ(y)``; raises DomainError outside the domains."""
    x, y = as_rational(x), as_rational(y)
    _check_point(u, x, y)
    return sum((pw_eval(fx, x) * pw_eval(fy, y) for fx, fy in u.terms), Fraction(0))


def to_grid(
    u: SeparableTensor, xs: Sequence[RationalLike], ys: Sequence[RationalLike]
) -> GridFunction:
    """Tabulate *u* on ``xs × ys``; each factor is evaluated once per axis node."""
    xs = tuple(as_rational(x) for x in xs)
    ys = tuple(as_rational(y) for y in ys)
    if xs and ys:
        _check_point(u, xs[0], ys[0])
        _check_point(u, xs[-1], ys[-1])
    x_values = [[pw_eval(fx, x) for x in xs] for fx, _ in u.terms]
    y_values = [[pw_eval(fy, y) for y in ys] for _, fy in u.terms]
    values = tuple(
        tuple(
            sum((xv[i] * yv[j] for xv, yv in zip(x_values, y_values)), Fraction(0))
            for j in range(len(ys))
        )
        for i in range(len(xs))
    )
    return GridFunction(xs, ys, values)
