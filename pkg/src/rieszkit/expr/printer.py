"""Canonical text form; ``parse_expr(print_expr(e)) == e`` for every tree."""

from __future__ import annotations

from ..numeric import format_rational
from .ast import Abs, Add, Expr, Gen, Join, Meet, Mul, NegPart, Pos, Scale, Unit, fold

__all__ = ("print_expr",)

_FUNC = {Abs: "abs", Pos: "pos", NegPart: "negp", Meet: "meet", Join: "join"}


def _atomic(node: Expr, text: str) -> str:
    """Text usable as the right operand of ``c*``."""
    if isinstance(node, (Gen, Unit)) or type(node) in _FUNC:
        return text
    return f"({text})"


def print_expr(e: Expr) -> str:
    def step(node: Expr, kids: tuple[str, ...]) -> str:
        match node:
            case Gen(name=name):
                return name
            case Unit():
                return "1"
            case Scale(c=c, e=Unit()) if c != 1:
                return format_rational(c)
            case Scale(c=c, e=inner):
                return f"{format_rational(c)}*{_atomic(inner, kids[0])}"
            case Add(right=right):
                rhs = f"({kids[1]})" if isinstance(right, Add) else kids[1]
                return f"{kids[0]} + {rhs}"
            case Mul(left=left, right=right):
                lhs = f"({kids[0]})" if isinstance(left, (Add, Scale, Unit)) else kids[0]
                rhs = kids[1] if isinstance(right, Gen) or type(right) in _FUNC else f"({kids[1]})"
                return f"{lhs}*{rhs}"
            case _:
                return f"{_FUNC[type(node)]}({', '.join(kids)})"

    return fold(e, step)
