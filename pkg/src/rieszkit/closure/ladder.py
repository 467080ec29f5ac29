"""
rieszkit.closure.ladder - Budgeted growth of the ladder L_1 ⊆ L_2 ⊆ ….

``L_{n+1}`` is spanned by ``L_n`` and ``|L_n|``. Each level here is a finite
under-approximation: only finitely many candidates ``|v|`` are tried, so a
report never claims that ``L_n`` itself is finite-dimensional.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from ..config import Budget, active_budget
from ..core import Model
from ..exceptions import BudgetError, DomainError
from ..expr import Abs, Add, Expr, Gen, Mul, Scale, Unit, print_expr
from ..models import PwModel
from ..numeric import Polynomial, format_rational
from ..pwfun import PiecewiseFunction, pw_abs
from ..sampling import substream
from .span import NotInSpan, SpanBasis, span_membership

__all__ = (
    "LadderBasis",
    "LadderReport",
    "LevelReport",
    "ladder_extend",
    "ladder_saturation",
    "ladder_report",
    "subalgebra_not_riesz_witness",
)

logger = logging.getLogger(__name__)

PROBE_BOUND = 16


@dataclass(frozen=True)
class LadderLevel:
    basis: SpanBasis
    witnesses: tuple[Expr, ...]  # one expression per basis element
    added: int


@dataclass(frozen=True)
class LadderBasis:
    """Per-level bases; every level's span contains the previous one."""

    levels: tuple[LadderLevel, ...]

    @property
    def top(self) -> LadderLevel:
        return self.levels[-1]

    @property
    def dimensions(self) -> list[int]:
        return [level.basis.dimension for level in self.levels]

    @classmethod
    def from_generators(
        cls,
        model: type[Model],
        generators: Mapping[str, Any],
        *,
        product_degree: int = 1,
        include_unit: bool = False,
        carrier: Any = None,
        seed: int = 0,
    ) -> LadderBasis:
        """Level 1 from named generators, optionally closed under products.

        With ``product_degree = k`` every monomial of total degree ≤ k in the
        generators is a candidate, so level 1 spans the subalgebra B up to
        that degree. Dependent candidates are skipped.
        """
        if carrier is None:
            if not generators:
                raise DomainError(
                    "Cannot seed an empty ladder without a carrier",
                    model=model.model_key,
                )
            carrier = model.carrier_of(next(iter(generators.values())))
        candidates: list[tuple[Expr, Any]] = []
        if include_unit:
            candidates.append((Unit(), model.unit(carrier)))
        names = sorted(generators)
        for degree in range(1, product_degree + 1):
            for combo in itertools.combinations_with_replacement(names, degree):
                expr: Expr = Gen(combo[0])
                value = generators[combo[0]]
                for name in combo[1:]:
                    expr = Mul(expr, Gen(name))
                    value = model.mul(value, generators[name])
                candidates.append((expr, value))
        basis = SpanBasis.empty(model, carrier, seed)
        witnesses: list[Expr] = []
        for expr, value in candidates:
            result = span_membership(value, basis)
            if isinstance(result, NotInSpan):
                basis = basis.extended(value, result, print_expr(expr))
                witnesses.append(expr)
        _check_dimension(basis.dimension, active_budget())
        return cls((LadderLevel(basis, tuple(witnesses), basis.dimension),))


def _check_dimension(dimension: int, budget: Budget) -> None:
    if dimension > budget.dimension_cap:
        raise BudgetError(
            "Ladder level exceeds the dimension cap",
            budget="dimension_cap",
            limit=budget.dimension_cap,
            actual=dimension,
        )


def _combination_expr(coefficients: Sequence[Fraction], witnesses: Sequence[Expr]) -> Expr:
    terms = [w if c == 1 else Scale(c, w) for c, w in zip(coefficients, witnesses) if c != 0]
    if not terms:
        return Scale(Fraction(0), Unit())
    out = terms[0]
    for term in terms[1:]:
        out = Add(out, term)
    return out


def _candidates(level: LadderLevel, probe_count: int, rng):
    """Coefficient vectors v; the candidate is ``|Σ vᵢ bᵢ|``."""
    n = level.basis.dimension
    unit = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    yield from unit
    for i, j in itertools.combinations(range(n), 2):
        v = [Fraction(0)] * n
        v[i], v[j] = Fraction(1), Fraction(-1)
        yield v
    for _ in range(probe_count):
        yield [
            Fraction(rng.randint(-PROBE_BOUND, PROBE_BOUND), rng.randint(1, PROBE_BOUND))
            for _ in range(n)
        ]


def ladder_extend(
    ladder: LadderBasis,
    probe_count: int,
    seed: int,
    budget: Budget | None = None,
) -> LadderBasis:
    """Append one level: every candidate ``|v|`` not already in the span is added."""
    budget = budget or active_budget()
    top = ladder.top
    model = top.basis.model
    rng = substream(seed, "ladder", len(ladder.levels))
    basis, witnesses, added = top.basis, list(top.witnesses), 0
    for coefficients in _candidates(top, probe_count, rng):
        v = top.basis.combination(coefficients)
        candidate = model.abs(v)
        result = span_membership(candidate, basis)
        if isinstance(result, NotInSpan):
            witness = Abs(_combination_expr(coefficients, top.witnesses))
            basis = basis.extended(candidate, result, print_expr(witness))
            witnesses.append(witness)
            added += 1
            _check_dimension(basis.dimension, budget)
    logger.debug(
        "ladder level %d: dimension %d (+%d)", len(ladder.levels) + 1, basis.dimension, added
    )
    level = LadderLevel(basis, tuple(witnesses), added)
    return LadderBasis((*ladder.levels, level))


def ladder_saturation(ladder: LadderBasis) -> bool:
    """True iff the last extension added nothing."""
    if len(ladder.levels) < 2:
        raise DomainError("Saturation needs at least two levels", levels=len(ladder.levels))
    return ladder.top.added == 0


# ------------------------------------------------------------------- report
class LevelReport(BaseModel):
    level: int
    dimension: int
    added: int
    witnesses: list[str]


class LadderReport(BaseModel):
    model: str
    seed: int
    probe_count: int
    levels: list[LevelReport]
    saturated: bool
    budget: dict[str, Any] = Field(default_factory=dict)
    note: str = (
        "Each level is a budgeted under-approximation of L_n built from finitely many "
        "candidates; dimensions are lower bounds, not claims that L_n is finite-dimensional."
    )


def ladder_report(
    ladder: LadderBasis, *, seed: int, probe_count: int, budget: Budget
) -> LadderReport:
    levels = [
        LevelReport(
            level=i + 1,
            dimension=level.basis.dimension,
            added=level.added,
            witnesses=(
                [print_expr(w) for w in level.witnesses[-level.added :]]
                if level.added
                else []
            ),
        )
        for i, level in enumerate(ladder.levels)
    ]
    return LadderReport(
        model=ladder.top.basis.model.model_key,
        seed=seed,
        probe_count=probe_count,
        levels=levels,
        saturated=len(ladder.levels) >= 2 and ladder_saturation(ladder),
        budget={
            "dimension_cap": budget.dimension_cap,
            "piece_cap": budget.piece_cap,
            "degree_cap": budget.degree_cap,
            "budgeted": True,
        },
    )


# --------------------------------------------------------------- subalgebra
def subalgebra_not_riesz_witness(max_degree: int, domain=(Fraction(0), Fraction(1))) -> NotInSpan:
    """Evidence that a subalgebra need not be a Riesz subspace.

    ``x - 2x²`` lies in the algebra generated by ``x`` on ``[0, 1]``, but its
    modulus has a kink at 1/2 and so is outside ``span{x, x², …, x^k}``.
    """

    if max_degree < 2:
        raise DomainError("The example needs x² in the span", max_degree=max_degree)
    monomials = [
        PiecewiseFunction.polynomial(Polynomial([0] * k + [1]), domain)
        for k in range(1, max_degree + 1)
    ]
    basis = SpanBasis.build(
        PwModel, monomials, labels=[f"x^{k}" for k in range(1, max_degree + 1)]
    )
    target = pw_abs(PiecewiseFunction.polynomial(Polynomial([0, 1, -2]), domain))
    result = span_membership(target, basis)
    if not isinstance(result, NotInSpan):  # pragma: no cover - |x - 2x²| is not polynomial
        raise DomainError(
            "Unexpected membership",
            coefficients=[format_rational(c) for c in result.coefficients],
        )
    return result
