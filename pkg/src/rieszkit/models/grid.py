"""Grid model: functions on a finite rational grid, a desk-scale C(X×Y)."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..core import Model, ModelBase
from ..exceptions import DomainError, ParseError
from ..numeric import as_rational, format_rational

__all__ = ("GridFunction", "GridModel", "equispaced")


def equispaced(lo: Fraction, hi: Fraction, count: int) -> tuple[Fraction, ...]:
    """``count`` ascending rationals from lo to hi inclusive."""
    if count == 1:
        return (lo,)
    step = (hi - lo) / (count - 1)
    return tuple(lo + i * step for i in range(count))


@dataclass(frozen=True)
class GridFunction:
    """Values on ``xs × ys``; ``values[i][j]`` is the value at ``(xs[i], ys[j])``."""

    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.xs or not self.ys:
            raise DomainError("Grid needs at least one node per axis")
        if any(a >= b for a, b in zip(self.xs, self.xs[1:])) or any(
            a >= b for a, b in zip(self.ys, self.ys[1:])
        ):
            raise DomainError("Grid axes must be strictly ascending")
        if len(self.values) != len(self.xs) or any(len(row) != len(self.ys) for row in self.values):
            raise DomainError(
                "Grid values do not match the axes",
                nx=len(self.xs),
                ny=len(self.ys),
            )

    @classmethod
    def tabulate(
        cls,
        xs: Sequence[Fraction],
        ys: Sequence[Fraction],
        fn: Callable[[Fraction, Fraction], Fraction],
    ) -> GridFunction:
        xs, ys = tuple(xs), tuple(ys)
        return cls(xs, ys, tuple(tuple(as_rational(fn(x, y)) for y in ys) for x in xs))

    @classmethod
    def constant(cls, c: Fraction, xs: Sequence[Fraction], ys: Sequence[Fraction]) -> GridFunction:
        return cls.tabulate(xs, ys, lambda _x, _y: c)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.xs), len(self.ys)

    def map(self, fn: Callable[[Fraction], Fraction]) -> GridFunction:
        values = tuple(tuple(fn(v) for v in row) for row in self.values)
        return GridFunction(self.xs, self.ys, values)

    def zip_with(
        self, other: GridFunction, fn: Callable[[Fraction, Fraction], Fraction]
    ) -> GridFunction:
        return GridFunction(
            self.xs,
            self.ys,
            tuple(
                tuple(fn(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.values, other.values)
            ),
        )

    def at(self, i: int, j: int) -> Fraction:
        return self.values[i][j]

    def nodes(self):
        """Yield ``(i, j, x, y, value)`` in row-major order."""
        for i, x in enumerate(self.xs):
            for j, y in enumerate(self.ys):
                yield i, j, x, y, self.values[i][j]

    def zero_nodes(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _, _, v in self.nodes() if v == 0]


class GridModel(ModelBase, Model[GridFunction]):
    """Componentwise f-algebra on a grid; carrier is the axis pair."""

    model_key = "grid"

    @classmethod
    def carrier_of(cls, x: GridFunction):
        return x.xs, x.ys

    @classmethod
    def unit(cls, carrier) -> GridFunction:
        xs, ys = carrier
        return GridFunction.constant(Fraction(1), xs, ys)

    @classmethod
    def zero(cls, carrier) -> GridFunction:
        xs, ys = carrier
        return GridFunction.constant(Fraction(0), xs, ys)

    @classmethod
    def add(cls, x, y):
        cls._check_carrier(x, y)
        return x.zip_with(y, lambda a, b: a + b)

    @classmethod
    def scale(cls, c, x):
        return x.map(lambda a: c * a)

    @classmethod
    def mul(cls, x, y):
        cls._check_carrier(x, y)
        return x.zip_with(y, lambda a, b: a * b)

    @classmethod
    def abs(cls, x):
        return x.map(abs)

    @classmethod
    def meet(cls, x, y):
        cls._check_carrier(x, y)
        return x.zip_with(y, min)

    @classmethod
    def join(cls, x, y):
        cls._check_carrier(x, y)
        return x.zip_with(y, max)

    @classmethod
    def equal(cls, x, y) -> bool:
        cls._check_carrier(x, y)
        return x.values == y.values

    @classmethod
    def leq(cls, x, y) -> bool:
        cls._check_carrier(x, y)
        return all(a <= b for r1, r2 in zip(x.values, y.values) for a, b in zip(r1, r2))

    @classmethod
    def first_difference(cls, x, y) -> dict[str, Any] | None:
        """The first node where x and y differ, as a JSON-ready record."""
        cls._check_carrier(x, y)
        for i, j, gx, gy, v in x.nodes():
            if v != y.values[i][j]:
                return {
                    "x": format_rational(gx),
                    "y": format_rational(gy),
                    "left": format_rational(v),
                    "right": format_rational(y.values[i][j]),
                }
        return None

    @classmethod
    def to_json(cls, x: GridFunction) -> Any:
        return {
            "xs": [format_rational(v) for v in x.xs],
            "ys": [format_rational(v) for v in x.ys],
            "values": [[format_rational(v) for v in row] for row in x.values],
        }

    @classmethod
    def from_json(cls, data: Any) -> GridFunction:
        if not isinstance(data, dict) or not {"xs", "ys", "values"} <= set(data):
            raise ParseError(
                "Grid functions are given as {xs, ys, values}", source=repr(data)[:200]
            )
        return GridFunction(
            tuple(as_rational(v) for v in data["xs"]),
            tuple(as_rational(v) for v in data["ys"]),
            tuple(tuple(as_rational(v) for v in row) for row in data["values"]),
        )
