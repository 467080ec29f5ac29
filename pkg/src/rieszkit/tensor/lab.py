"""
rieszkit.tensor.lab - Closure of the Riesz tensor product under multiplication.

Separable generators are level-1 elements of the algebra they generate, so
the product rewriter applies unchanged; the resulting identity is checked on
a grid model of C(X×Y) and at random off-grid rational points.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from pydantic import BaseModel

from ..exceptions import BindingError, CarrierMismatchError
from ..expr import Expr, ModelBinding, eval_in_model, parse_expr
from ..models import GridFunction, GridModel, Vector, VectorModel, equispaced
from ..numeric import format_rational
from ..pwfun.function import Domain
from ..rewrite import Certificate, make_certificate
from ..sampling import random_pl_function, substream
from .separable import SeparableTensor, tensor_eval, to_grid

__all__ = (
    "TensorBinding",
    "WeakUnitReport",
    "riesz_tensor_check",
    "weak_unit_probe",
    "random_separable",
)

logger = logging.getLogger(__name__)

SPOT_DENOMINATOR = 97


@dataclass(frozen=True)
class TensorBinding:
    """Generator names bound to separable tensors over one pair of domains."""

    xdomain: Domain
    ydomain: Domain
    generators: Mapping[str, SeparableTensor] = field(default_factory=dict)

    def __post_init__(self):
        for name, u in self.generators.items():
            if u.carrier != (self.xdomain, self.ydomain):
                raise CarrierMismatchError(
                    f"Tensor generator {name!r} lives on different domains",
                    left=str((self.xdomain, self.ydomain)),
                    right=str(u.carrier),
                )

    def axes(self, grid: tuple[int, int]) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        nx, ny = grid
        return equispaced(*self.xdomain, nx), equispaced(*self.ydomain, ny)

    def grid_binding(self, grid: tuple[int, int]) -> ModelBinding:
        """The derived binding in the grid model; evaluation commutes with every operation."""
        xs, ys = self.axes(grid)
        return ModelBinding(
            GridModel,
            {name: to_grid(u, xs, ys) for name, u in sorted(self.generators.items())},
            (xs, ys),
            params={"nx": grid[0], "ny": grid[1]},
        )

    def point_binding(self, points: Sequence[tuple[Fraction, Fraction]]) -> ModelBinding:
        """Pointwise evaluation at *points*, one vector coordinate per point."""
        if not points:
            raise BindingError("A point binding needs at least one point")
        return ModelBinding(
            VectorModel,
            {
                name: Vector(tuple(tensor_eval(u, x, y) for x, y in points))
                for name, u in sorted(self.generators.items())
            },
            len(points),
            params={
                "off_grid": True,
                "points": [[format_rational(x), format_rational(y)] for x, y in points],
            },
        )

    def describe(self) -> str:
        (xlo, xhi), (ylo, yhi) = self.xdomain, self.ydomain
        names = ", ".join(f"{name} ({len(u)} terms)" for name, u in sorted(self.generators.items()))
        return (
            f"separable generators {names} on "
            f"[{format_rational(xlo)},{format_rational(xhi)}]"
            f"x[{format_rational(ylo)},{format_rational(yhi)}]"
        )


def _off_grid_points(
    rng: random.Random, binding: TensorBinding, grid: tuple[int, int], count: int
) -> list[tuple[Fraction, Fraction]]:
    xs, ys = binding.axes(grid)
    nodes = set(xs), set(ys)
    points: list[tuple[Fraction, Fraction]] = []
    while len(points) < count:
        x, y = (
            lo + (hi - lo) * Fraction(rng.randint(0, SPOT_DENOMINATOR), SPOT_DENOMINATOR)
            for lo, hi in (binding.xdomain, binding.ydomain)
        )
        if x in nodes[0] and y in nodes[1]:
            continue
        points.append((x, y))
    return points


def riesz_tensor_check(
    f_text: str | Expr,
    g_text: str | Expr,
    binding: TensorBinding,
    grid: tuple[int, int] = (16, 16),
    *,
    seed: int = 0,
    trials: int = 20,
    spot_checks: int = 10,
    pospos=None,
) -> Certificate:
    """Certify ``f·g`` in ladder form over separable generators.

    The identity is checked on the grid model and, pointwise, at
    *spot_checks* seeded rational points off the grid. Pointwise evaluation
    is exact wherever the breakpoints lie, rational or algebraic.
    """
    bindings = [binding.grid_binding(grid)]
    if spot_checks:
        rng = substream(seed, "tensor", "spot")
        bindings.append(binding.point_binding(_off_grid_points(rng, binding, grid, spot_checks)))
    cert = make_certificate(
        f_text,
        g_text,
        bindings,
        seed=seed,
        trials=trials,
        b_presentation=binding.describe(),
        pospos=pospos,
    )
    logger.debug(
        "tensor certificate on %dx%d grid with %d spot checks",
        grid[0],
        grid[1],
        spot_checks,
    )
    return cert


class WeakUnitReport(BaseModel):
    expression: str
    grid: list[int]
    unit_meet_zeros: list[list[int]]
    expression_zeros: list[list[int]]
    consistent: bool


def weak_unit_probe(
    u_text: str | Expr, binding: TensorBinding, grid: tuple[int, int] = (16, 16)
) -> WeakUnitReport:
    """Compare the zero nodes of ``|u| ∧ (1⊗1)`` and of ``u`` on the grid.

    ``1⊗1`` is strictly positive, so the two node sets agree; only this
    pointwise statement is checked.
    """
    u = parse_expr(u_text) if isinstance(u_text, str) else u_text
    grid_binding = binding.grid_binding(grid)
    value: GridFunction = eval_in_model(u, grid_binding)
    v = GridModel.meet(GridModel.abs(value), GridModel.unit(grid_binding.carrier))
    v_zeros = v.zero_nodes()
    u_zeros = value.zero_nodes()
    return WeakUnitReport(
        expression=str(u),
        grid=list(grid),
        unit_meet_zeros=[list(node) for node in v_zeros],
        expression_zeros=[list(node) for node in u_zeros],
        consistent=v_zeros == u_zeros,
    )


def random_separable(
    rng: random.Random,
    xdomain: Domain,
    ydomain: Domain,
    max_terms: int = 2,
) -> SeparableTensor:
    """A sum of one to *max_terms* products of random piecewise-linear factors."""
    count = rng.randint(1, max_terms)
    return SeparableTensor.of(
        xdomain,
        ydomain,
        [
            (
                random_pl_function(rng, xdomain, max_breaks=2, max_num=8, max_den=4),
                random_pl_function(rng, ydomain, max_breaks=2, max_num=8, max_den=4),
            )
            for _ in range(count)
        ],
    )
