"""
rieszkit.closure.span - Certified span membership by sample-then-verify.

Elements are sampled at finitely many points; the sample matrix of a
:class:`SpanBasis` always has full column rank, so a sample solution is
unique. Membership answers are then certified:

* a coefficient vector is only returned after exact model equality holds;
* ``NotInSpan`` carries sample points at which the linear system is
  inconsistent, which rules out every combination.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Protocol

from ..core import Model
from ..exceptions import CarrierMismatchError, DomainError
from ..models import GridFunction, Vector
from ..pwfun import PiecewiseFunction, pw_eval, pw_leq_witness, pw_sub
from .linalg import rank, solve

__all__ = (
    "SpanBasis",
    "InSpan",
    "NotInSpan",
    "SpanResult",
    "span_membership",
    "sampler_for",
    "MARGIN",
)

logger = logging.getLogger(__name__)

MARGIN = 8
MAX_RESAMPLES = 16


# ----------------------------------------------------------------- samplers
class Sampler(Protocol):
    def draw(self, rng: random.Random, count: int, exclude: set) -> list[Hashable]: ...

    def value(self, x: Any, point: Hashable) -> Fraction: ...

    def witness(self, x: Any, y: Any) -> Hashable | None: ...


class _VectorSampler:
    def __init__(self, dim: int):
        self.dim = dim

    def draw(self, rng, count, exclude):
        pool = [i for i in range(self.dim) if i not in exclude]
        return sorted(rng.sample(pool, min(count, len(pool))))

    def value(self, x: Vector, point):
        return x[point]

    def witness(self, x: Vector, y: Vector):
        return next((i for i, (a, b) in enumerate(zip(x, y)) if a != b), None)


class _GridSampler:
    def __init__(self, shape: tuple[int, int]):
        self.shape = shape

    def draw(self, rng, count, exclude):
        rows, cols = self.shape
        pool = [
            (i, j) for i in range(rows) for j in range(cols) if (i, j) not in exclude
        ]
        return sorted(rng.sample(pool, min(count, len(pool))))

    def value(self, x: GridFunction, point):
        return x.at(*point)

    def witness(self, x: GridFunction, y: GridFunction):
        return next(
            ((i, j) for i, j, _, _, v in x.nodes() if v != y.at(i, j)),
            None,
        )


class _PwSampler:
    DENOMINATOR = 1 << 10

    def __init__(self, domain: tuple[Fraction, Fraction]):
        self.lo, self.hi = domain

    def draw(self, rng, count, exclude):
        """Up to *count* dyadic points of the domain; fewer once the pool runs dry."""
        width = self.hi - self.lo
        steps = range(self.DENOMINATOR + 1)
        grid = {self.lo + width * Fraction(k, self.DENOMINATOR) for k in steps}
        pool = sorted(grid.difference(exclude))
        return rng.sample(pool, min(count, len(pool)))

    def value(self, x: PiecewiseFunction, point):
        return pw_eval(x, point)

    def witness(self, x: PiecewiseFunction, y: PiecewiseFunction):
        diff = pw_sub(x, y)
        zero = pw_sub(x, x)
        above = pw_leq_witness(diff, zero)
        return above if above is not None else pw_leq_witness(zero, diff)


def sampler_for(model: type[Model], carrier: Hashable) -> Sampler:
    match model.model_key:
        case "vector":
            return _VectorSampler(carrier)
        case "grid":
            xs, ys = carrier
            return _GridSampler((len(xs), len(ys)))
        case "pwfun":
            return _PwSampler(carrier)
    raise DomainError("No sampler for model", model=model.model_key)


# ------------------------------------------------------------------ results
@dataclass(frozen=True)
class InSpan:
    coefficients: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotInSpan:
    """The sample system at ``points`` has no solution."""

    points: tuple[Hashable, ...]
    values: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return False


SpanResult = InSpan | NotInSpan


# -------------------------------------------------------------------- basis
@dataclass(frozen=True)
class SpanBasis:
    """Linearly independent elements together with a rank certificate.

    ``matrix[r][c]`` is element ``c`` sampled at ``points[r]`` and has rank
    ``len(elements)``.
    """

    model: type[Model]
    carrier: Hashable
    elements: tuple[Any, ...]
    points: tuple[Hashable, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    seed: int = 0
    labels: tuple[str, ...] = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def sampler(self) -> Sampler:
        return sampler_for(self.model, self.carrier)

    @classmethod
    def empty(cls, model: type[Model], carrier: Hashable, seed: int = 0) -> SpanBasis:
        return cls(model, carrier, (), (), (), seed)

    @classmethod
    def build(
        cls,
        model: type[Model],
        elements: Sequence[Any],
        *,
        carrier: Hashable = None,
        seed: int = 0,
        labels: Sequence[str] = (),
    ) -> SpanBasis:
        """Sample *elements* until the rank certificate holds.

        Raises DomainError when the elements are linearly dependent (the
        certificate cannot be reached after repeated re-sampling).
        """
        if carrier is None:
            if not elements:
                raise DomainError("An empty basis needs an explicit carrier", model=model.model_key)
            carrier = model.carrier_of(elements[0])
        sampler = sampler_for(model, carrier)
        rng = random.Random(seed)
        n = len(elements)
        points = sampler.draw(rng, n + MARGIN, set())
        for attempt in range(MAX_RESAMPLES):
            matrix = [[sampler.value(x, p) for x in elements] for p in points]
            if n == 0 or rank(matrix) == n:
                return cls(
                    model,
                    carrier,
                    tuple(elements),
                    tuple(points),
                    tuple(tuple(row) for row in matrix),
                    seed,
                    tuple(labels),
                )
            logger.debug("rank certificate short on attempt %d; re-sampling", attempt)
            extra = sampler.draw(rng, n + MARGIN, set(points))
            if not extra:
                break
            points = points + extra
        raise DomainError(
            "Basis elements are linearly dependent (no rank certificate)",
            model=model.model_key,
            dimension=n,
            samples=len(points),
        )

    def combination(self, coefficients: Sequence[Fraction]) -> Any:
        total = self.model.zero(self.carrier)
        for c, x in zip(coefficients, self.elements):
            if c != 0:
                total = self.model.add(total, self.model.scale(c, x))
        return total

    def extended(self, element: Any, evidence: NotInSpan, label: str = "") -> SpanBasis:
        """Append an element known not to be in the span.

        The evidence points join the sample set, which keeps the certificate.
        """
        sampler = self.sampler
        points = list(self.points) + [p for p in evidence.points if p not in self.points]
        elements = (*self.elements, element)
        matrix = [[sampler.value(x, p) for x in elements] for p in points]
        if rank(matrix) != len(elements):  # pragma: no cover - evidence guarantees rank
            raise DomainError("Evidence does not certify independence", model=self.model.model_key)
        return SpanBasis(
            self.model,
            self.carrier,
            elements,
            tuple(points),
            tuple(tuple(row) for row in matrix),
            self.seed,
            (*self.labels, label),
        )


def span_membership(target: Any, basis: SpanBasis) -> SpanResult:
    """Coefficients with ``target = Σ cᵢ bᵢ`` exactly, or certified NotInSpan."""
    model, sampler = basis.model, basis.sampler
    if model.carrier_of(target) != basis.carrier:
        raise CarrierMismatchError(
            "Target and basis do not share a carrier",
            model=model.model_key,
            left=str(basis.carrier),
            right=str(model.carrier_of(target)),
        )
    points = list(basis.points)
    if not points:
        points = sampler.draw(random.Random(basis.seed), MARGIN, set())
    rows = [list(row) for row in basis.matrix]
    values = [sampler.value(target, p) for p in points]
    coefficients = solve(rows, values) if basis.dimension else []
    if coefficients is None or (not basis.dimension and any(values)):
        return NotInSpan(tuple(points), tuple(values))

    candidate = basis.combination(coefficients)
    if model.equal(candidate, target):
        return InSpan(tuple(coefficients))

    # the unique sample solution fails somewhere: that point breaks the system
    witness = sampler.witness(target, candidate)
    logger.debug("sample solution rejected at %r", witness)
    points.append(witness)
    values.append(sampler.value(target, witness))
    return NotInSpan(tuple(points), tuple(values))
