"""Piecewise-polynomial model of C[a,b]."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..core import Model, ModelBase
from ..exceptions import ParseError
from ..pwfun import (
    PiecewiseFunction,
    format_pw,
    parse_pw,
    pw_abs,
    pw_add,
    pw_equal,
    pw_join,
    pw_leq,
    pw_meet,
    pw_mul,
    pw_neg,
    pw_pos,
    pw_scale,
)
from ..pwfun.function import check_same_domain

__all__ = ("PwModel",)


class PwModel(ModelBase, Model[PiecewiseFunction]):
    """Exact piecewise functions; carrier is the domain ``(lo, hi)``."""

    model_key = "pwfun"

    @classmethod
    def carrier_of(cls, x: PiecewiseFunction) -> tuple[Fraction, Fraction]:
        return x.domain

    @classmethod
    def _check_carrier(cls, x, y):
        return check_same_domain(x, y)

    @classmethod
    def unit(cls, carrier: tuple[Fraction, Fraction]) -> PiecewiseFunction:
        return PiecewiseFunction.constant(1, carrier)

    @classmethod
    def zero(cls, carrier: tuple[Fraction, Fraction]) -> PiecewiseFunction:
        return PiecewiseFunction.constant(0, carrier)

    @classmethod
    def add(cls, x, y):
        return pw_add(x, y)

    @classmethod
    def scale(cls, c, x):
        return pw_scale(c, x)

    @classmethod
    def mul(cls, x, y):
        return pw_mul(x, y)

    @classmethod
    def abs(cls, x):
        return pw_abs(x)

    @classmethod
    def pos(cls, x):
        return pw_pos(x)

    @classmethod
    def neg(cls, x):
        return pw_neg(x)

    @classmethod
    def meet(cls, x, y):
        return pw_meet(x, y)

    @classmethod
    def join(cls, x, y):
        return pw_join(x, y)

    @classmethod
    def equal(cls, x, y) -> bool:
        return pw_equal(x, y)

    @classmethod
    def leq(cls, x, y) -> bool:
        return pw_leq(x, y)

    @classmethod
    def to_json(cls, x: PiecewiseFunction) -> Any:
        return format_pw(x)

    @classmethod
    def from_json(cls, data: Any) -> PiecewiseFunction:
        if not isinstance(data, str):
            raise ParseError("Piecewise functions are given as pw{...} literals", source=repr(data))
        return parse_pw(data)
