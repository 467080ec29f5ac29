"""Structural ladder levels: which ``L_n`` an expression is witnessed in."""

from __future__ import annotations

from typing import Final, Literal, Union

from .ast import Abs, Add, Expr, Gen, Join, Meet, Mul, NegPart, Pos, Scale, Unit, fold, iter_nodes

__all__ = ("UNSTRATIFIED", "Level", "ladder_level", "is_ladder_form", "unstratified_products")

UNSTRATIFIED: Final = "unstratified"
Level = Union[int, Literal["unstratified"]]


def ladder_level(e: Expr) -> Level:
    """Upper bound on the least n with ``e ∈ L_n`` when generators populate ``L_1``.

    Gen and Unit sit at level 1, Scale and Add take the max of their children,
    Abs adds one, and a product is level 1 only when both factors are; any
    other product is unstratified. Sugar nodes get the level of their desugaring.
    """

    def step(node: Expr, kids: tuple[Level, ...]) -> Level:
        if UNSTRATIFIED in kids:
            return UNSTRATIFIED
        match node:
            case Gen() | Unit():
                return 1
            case Scale() | Add():
                return max(kids)
            case Abs() | Pos() | NegPart():
                return kids[0] + 1
            case Meet() | Join():
                return max(kids) + 1
            case Mul():
                return 1 if kids == (1, 1) else UNSTRATIFIED
        raise TypeError(f"Unknown node kind {node.kind}")  # pragma: no cover

    return fold(e, step)


def is_ladder_form(e: Expr) -> bool:
    return ladder_level(e) != UNSTRATIFIED


def unstratified_products(e: Expr) -> list[Expr]:
    """Mul nodes whose factors are not both level 1."""
    return [
        node
        for node in iter_nodes(e)
        if isinstance(node, Mul)
        and (ladder_level(node.left) != 1 or ladder_level(node.right) != 1)
    ]
