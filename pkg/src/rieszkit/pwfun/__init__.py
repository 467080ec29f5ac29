"""Exact piecewise-polynomial functions: the concrete C[a,b] f-algebra."""

from .function import PiecewiseFunction, UnitFunction, unit_function
from .literal import format_pw, parse_pw
from .ops import (
    pw_abs,
    pw_add,
    pw_equal,
    pw_eval,
    pw_join,
    pw_leq,
    pw_leq_witness,
    pw_meet,
    pw_mul,
    pw_neg,
    pw_pos,
    pw_precompose,
    pw_scale,
    pw_sub,
    pw_truncate_converges,
)

__all__ = (
    "PiecewiseFunction",
    "UnitFunction",
    "format_pw",
    "parse_pw",
    "pw_abs",
    "pw_add",
    "pw_equal",
    "pw_eval",
    "pw_join",
    "pw_leq",
    "pw_leq_witness",
    "pw_meet",
    "pw_mul",
    "pw_neg",
    "pw_pos",
    "pw_precompose",
    "pw_scale",
    "pw_sub",
    "pw_truncate_converges",
    "unit_function",
)
