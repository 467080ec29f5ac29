"""Componentwise model ℚᵈ: the simplest unital semiprime f-algebra."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from typing_extensions import Self

from ..core import Model, ModelBase
from ..numeric import as_rational, format_rational
from ..numeric.rational import RationalLike

__all__ = ("Vector", "VectorModel")


@dataclass(frozen=True)
class Vector:
    """Element of ℚᵈ."""

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> Self:
        return cls(tuple(as_rational(v) for v in values))

    @property
    def dim(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(v) for v in self.values) + ")"


class VectorModel(ModelBase, Model[Vector]):
    """ℚᵈ with componentwise operations; carrier is the dimension."""

    model_key = "vector"

    @classmethod
    def carrier_of(cls, x: Vector) -> int:
        return x.dim

    @classmethod
    def unit(cls, carrier: int) -> Vector:
        return Vector((Fraction(1),) * carrier)

    @classmethod
    def zero(cls, carrier: int) -> Vector:
        return Vector((Fraction(0),) * carrier)

    @classmethod
    def add(cls, x: Vector, y: Vector) -> Vector:
        cls._check_carrier(x, y)
        return Vector(tuple(a + b for a, b in zip(x, y)))

    @classmethod
    def scale(cls, c: Fraction, x: Vector) -> Vector:
        return Vector(tuple(c * a for a in x))

    @classmethod
    def mul(cls, x: Vector, y: Vector) -> Vector:
        cls._check_carrier(x, y)
        return Vector(tuple(a * b for a, b in zip(x, y)))

    @classmethod
    def abs(cls, x: Vector) -> Vector:
        return Vector(tuple(abs(a) for a in x))

    @classmethod
    def meet(cls, x: Vector, y: Vector) -> Vector:
        cls._check_carrier(x, y)
        return Vector(tuple(min(a, b) for a, b in zip(x, y)))

    @classmethod
    def join(cls, x: Vector, y: Vector) -> Vector:
        cls._check_carrier(x, y)
        return Vector(tuple(max(a, b) for a, b in zip(x, y)))

    @classmethod
    def pos(cls, x: Vector) -> Vector:
        return Vector(tuple(max(a, Fraction(0)) for a in x))

    @classmethod
    def neg(cls, x: Vector) -> Vector:
        return Vector(tuple(max(-a, Fraction(0)) for a in x))

    @classmethod
    def equal(cls, x: Vector, y: Vector) -> bool:
        cls._check_carrier(x, y)
        return x.values == y.values

    @classmethod
    def leq(cls, x: Vector, y: Vector) -> bool:
        cls._check_carrier(x, y)
        return all(a <= b for a, b in zip(x, y))

    @classmethod
    def project(cls, x: Vector, i: int) -> Fraction:
        """Coordinate projection: a multiplicative Riesz homomorphism ℚᵈ → ℚ."""
        return x.values[i]

    @classmethod
    def to_json(cls, x: Vector) -> Any:
        return [format_rational(v) for v in x]

    @classmethod
    def from_json(cls, data: Any) -> Vector:
        if isinstance(data, (int, str)):
            data = [data]
        return Vector.of(data)
