"""Rewrite lattice sugar into the core {Gen, Unit, Scale, Add, Mul, Abs}."""

from __future__ import annotations

from fractions import Fraction

from .ast import Abs, Add, Expr, Join, Meet, Mul, NegPart, Pos, Scale, fold

__all__ = ("desugar", "HALF")

HALF = Fraction(1, 2)
MINUS_ONE = Fraction(-1)


def desugar(e: Expr) -> Expr:
    """Value-preserving rewrite using

    ``a∨b = (a+b+|a−b|)/2``, ``a∧b = (a+b−|a−b|)/2``,
    ``a⁺ = (a+|a|)/2`` and ``a⁻ = (|a|−a)/2``.

    Unchanged subtrees are returned as the same objects, so core input comes
    back identical and shared subterms stay shared.
    """

    def step(node: Expr, kids: tuple[Expr, ...]) -> Expr:
        match node:
            case Pos():
                (f,) = kids
                return Scale(HALF, Add(f, Abs(f)))
            case NegPart():
                (f,) = kids
                return Scale(HALF, Add(Abs(f), Scale(MINUS_ONE, f)))
            case Meet():
                f, g = kids
                diff = Abs(Add(f, Scale(MINUS_ONE, g)))
                return Scale(HALF, Add(Add(f, g), Scale(MINUS_ONE, diff)))
            case Join():
                f, g = kids
                return Scale(HALF, Add(Add(f, g), Abs(Add(f, Scale(MINUS_ONE, g)))))
        if all(k is c for k, c in zip(kids, node.children())):
            return node
        match node:
            case Scale(c=c):
                return Scale(c, kids[0])
            case Add():
                return Add(*kids)
            case Mul():
                return Mul(*kids)
            case Abs():
                return Abs(kids[0])
        raise TypeError(f"Unknown node kind {node.kind}")  # pragma: no cover

    return fold(e, step)
