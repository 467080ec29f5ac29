"""
rieszkit.rewrite.rewriter - Rewrite products of ladder expressions into ladder form.

Input operands are core expressions whose products only join level-1
subterms. The output for ``f·g`` has the same property, so it is a witness
that the product lies in the Riesz subspace generated by the subalgebra.

Rules, with operands flattened into ``A + Σ dⱼ|hⱼ|`` (``A`` level 1):

* ``A·B`` for level-1 operands stays a plain product;
* ``|h|·|k| = |h·k|``;
* ``a·|k|`` goes through :func:`fabsg_rewrite`;
* for level-1 ``a, b``: ``a·|b| = a⁺b⁺ + a⁺b⁻ − a⁻b⁺ − a⁻b⁻``
  with ``x⁻ = (−x)⁺``
  and each ``a⁺b⁺ = (ab)⁺ ∧ ((a+a³)⁺ + (b+b³)⁺)``;
* for higher ``g``: ``a·|g| = |a⁺·g| − |a⁻·g|``;
* for syntactically positive ``f``: ``f·|g| = |f·g|``.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from ..config import active_budget
from ..exceptions import DomainError, FuelExhaustedError
from ..expr import (
    Abs,
    Add,
    Expr,
    ExprTable,
    Meet,
    Mul,
    Pos,
    Scale,
    Unit,
    desugar,
    expr_size,
    ladder_level,
    neg,
    print_expr,
)
from ..expr.ast import fold
from ..expr.ladder import UNSTRATIFIED

__all__ = (
    "ProductRewriter",
    "pospos_rewrite",
    "product_rewrite",
    "fabsg_rewrite",
    "simplify_scales",
    "default_fuel",
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
_TEXT_LIMIT = 200


def _require_level_one(*operands: Expr) -> None:
    for e in operands:
        if ladder_level(e) != 1:
            raise DomainError(
                "Operand is not a level-1 (subalgebra) expression",
                operand=print_expr(e)[:_TEXT_LIMIT],
                level=str(ladder_level(e)),
            )


def _require_ladder(*operands: Expr) -> None:
    for e in operands:
        if ladder_level(e) == UNSTRATIFIED:
            raise DomainError(
                "Operand is not in ladder form",
                operand=print_expr(e)[:_TEXT_LIMIT],
            )


def cube(a: Expr) -> Expr:
    return Mul(a, Mul(a, a))


def pospos_rewrite(a: Expr, b: Expr) -> Expr:
    """``a⁺b⁺`` for level-1 ``a, b`` without a product above level 1.

    Returns the desugaring of ``(ab)⁺ ∧ ((a+a³)⁺ + (b+b³)⁺)``.
    """
    _require_level_one(a, b)
    return desugar(Meet(Pos(Mul(a, b)), Add(Pos(Add(a, cube(a))), Pos(Add(b, cube(b))))))


def default_fuel(f: Expr, g: Expr) -> int:
    levels = [lv for lv in (ladder_level(f), ladder_level(g)) if lv != UNSTRATIFIED]
    return 10 * (expr_size(f) + expr_size(g)) * max(levels, default=1)


def _is_positive(e: Expr) -> bool:
    """Syntactic positivity: Unit, moduli, and sums/products/positive scalings of those."""
    match e:
        case Unit() | Abs():
            return True
        case Scale(c=c, e=inner):
            return c >= 0 and _is_positive(inner)
        case Add(left=left, right=right) | Mul(left=left, right=right):
            return _is_positive(left) and _is_positive(right)
    return False


class ProductRewriter:
    """One rewriting session: fuel, a hash-consing table and a result cache.

    The cache keys on the operand pair, so repeated subproblems are solved
    once and their results shared.
    """

    def __init__(self, fuel: int, *, pospos=None):
        self.fuel = fuel
        self.calls = 0
        self.table = ExprTable()
        self._cache: dict[tuple[str, Expr, Expr], Expr] = {}
        self._pospos = pospos or pospos_rewrite

    # ------------------------------------------------------------- plumbing
    def _tick(self, op: str, f: Expr, g: Expr) -> None:
        self.calls += 1
        if self.calls > self.fuel:
            raise FuelExhaustedError(
                "Rewriter fuel exhausted",
                budget="fuel",
                limit=self.fuel,
                actual=self.calls,
                operation=op,
                subterm=f"{print_expr(f)[:_TEXT_LIMIT]} | {print_expr(g)[:_TEXT_LIMIT]}",
            )

    def _cached(self, op: str, f: Expr, g: Expr, compute) -> Expr:
        key = (op, f, g)
        if key not in self._cache:
            self._tick(op, f, g)
            self._cache[key] = self.table.intern(compute())
        return self._cache[key]

    @staticmethod
    def _flatten(e: Expr) -> tuple[Expr | None, list[tuple[Fraction, Expr]]]:
        """Split ``e`` into its level-1 part and coefficient/modulus-argument pairs.

        Nested Add and Scale are collapsed left to right; moduli with the same
        argument have their coefficients merged.
        """
        algebra: list[tuple[Fraction, Expr]] = []
        moduli: dict[Expr, Fraction] = {}

        def walk(node: Expr, c: Fraction) -> None:
            if c == 0:
                return
            if ladder_level(node) == 1:
                algebra.append((c, node))
                return
            match node:
                case Scale(c=d, e=inner):
                    walk(inner, c * d)
                case Add(left=left, right=right):
                    walk(left, c)
                    walk(right, c)
                case Abs(e=inner):
                    moduli[inner] = moduli.get(inner, Fraction(0)) + c
                case _:
                    raise DomainError(
                        "Operand is not in ladder form",
                        operand=print_expr(node)[:_TEXT_LIMIT],
                    )

        walk(e, Fraction(1))
        alg = _linear_sum(algebra)
        return alg, [(c, h) for h, c in moduli.items() if c != 0]

    # --------------------------------------------------------------- rules
    def product(self, f: Expr, g: Expr) -> Expr:
        """Ladder-form expression equal to ``f·g``."""
        if isinstance(f, Unit):
            return g
        if isinstance(g, Unit):
            return f
        return self._cached("product", f, g, lambda: self._product(f, g))

    def _product(self, f: Expr, g: Expr) -> Expr:
        if ladder_level(f) == 1 and ladder_level(g) == 1:
            return Mul(f, g)
        a, f_mod = self._flatten(f)
        b, g_mod = self._flatten(g)
        terms: list[tuple[Fraction, Expr]] = []
        if a is not None and b is not None:
            terms.append((Fraction(1), self.product(a, b)))
        if a is not None:
            terms.extend((d, self.fabsg(a, k)) for d, k in g_mod)
        if b is not None:
            terms.extend((c, self.fabsg(b, h)) for c, h in f_mod)
        for c, h in f_mod:
            for d, k in g_mod:
                terms.append((c * d, Abs(self.product(h, k))))
        return _linear_sum(terms) or Scale(Fraction(0), Unit())

    def fabsg(self, f: Expr, g: Expr) -> Expr:
        """Ladder-form expression equal to ``f·|g|``."""
        if isinstance(f, Unit):
            return Abs(g)
        return self._cached("fabsg", f, g, lambda: self._fabsg(f, g))

    def _fabsg(self, f: Expr, g: Expr) -> Expr:
        if _is_positive(f):
            return Abs(self.product(f, g))
        if ladder_level(f) == 1:
            if ladder_level(g) == 1:
                return self._split_signs(f, g)
            # a·|g| = |a⁺·g| − |a⁻·g|
            a_pos = Scale(HALF, Add(f, Abs(f)))
            a_neg = Scale(HALF, Add(Abs(f), neg(f)))
            positive = Abs(self.product(a_pos, g))
            return Add(positive, Scale(Fraction(-1), Abs(self.product(a_neg, g))))
        a, f_mod = self._flatten(f)
        terms = [(c, Abs(self.product(h, g))) for c, h in f_mod]
        if a is not None:
            terms.insert(0, (Fraction(1), self.fabsg(a, g)))
        return _linear_sum(terms) or Scale(Fraction(0), Unit())

    def _split_signs(self, a: Expr, b: Expr) -> Expr:
        """``a|b| = a⁺b⁺ + a⁺b⁻ − a⁻b⁺ − a⁻b⁻`` for level-1 ``a, b``."""
        pp = self._pospos(a, b)
        pn = self._pospos(a, neg(b))
        np_ = self._pospos(neg(a), b)
        nn = self._pospos(neg(a), neg(b))
        return Add(Add(pp, pn), Scale(Fraction(-1), Add(np_, nn)))


def _linear_sum(terms: list[tuple[Fraction, Expr]]) -> Expr | None:
    out: Expr | None = None
    for c, t in terms:
        if c == 0:
            continue
        term = t if c == 1 else Scale(c, t)
        out = term if out is None else Add(out, term)
    return out


def product_rewrite(f: Expr, g: Expr, *, fuel: int | None = None, pospos=None) -> Expr:
    """Ladder-form expression equal to ``f·g`` in every semiprime f-algebra.

    Lattice sugar in the operands is desugared first. *fuel* defaults to the
    active budget's fuel, or ``10·(size_f + size_g)·max_level``.
    """
    f, g = desugar(f), desugar(g)
    _require_ladder(f, g)
    fuel = fuel or active_budget().fuel or default_fuel(f, g)
    rewriter = ProductRewriter(fuel, pospos=pospos)
    result = rewriter.product(f, g)
    logger.debug(
        "product_rewrite used %d of %d fuel, %d shared nodes",
        rewriter.calls,
        fuel,
        len(rewriter.table),
    )
    return result


def fabsg_rewrite(f: Expr, g: Expr, *, fuel: int | None = None, pospos=None) -> Expr:
    """Ladder-form expression equal to ``f·|g|``."""
    f, g = desugar(f), desugar(g)
    _require_ladder(f, g)
    fuel = fuel or active_budget().fuel or default_fuel(f, g)
    return ProductRewriter(fuel, pospos=pospos).fabsg(f, g)


def simplify_scales(e: Expr) -> Expr:
    """Merge Scale chains: ``c·(d·x) → (cd)·x`` and drop ``1·x``. Nothing else changes."""

    def step(node: Expr, kids: tuple[Expr, ...]) -> Expr:
        if isinstance(node, Scale):
            inner = kids[0]
            c = node.c
            if isinstance(inner, Scale):
                c, inner = c * inner.c, inner.e
            if c == 1:
                return inner
            return node if inner is node.e and c == node.c else Scale(c, inner)
        if all(k is c for k, c in zip(kids, node.children())):
            return node
        return type(node)(*kids)

    return fold(e, step)
