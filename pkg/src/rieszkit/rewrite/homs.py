"""
rieszkit.rewrite.homs - Multiplicative Riesz homomorphisms between models.

Every kind here preserves sums, scalars, moduli and products exactly:
point evaluation on piecewise functions, coordinate projection on vectors,
evaluation at one grid node, and precomposition with a strictly increasing
piecewise-linear reparameterization. Scalar-valued homomorphisms land in
``ℚ¹`` (the one-dimensional vector model).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, ClassVar

from ..core import Model
from ..exceptions import CarrierMismatchError, DomainError
from ..models import GridFunction, PwModel, Vector, VectorModel
from ..numeric import format_rational
from ..pwfun import PiecewiseFunction, format_pw, pw_eval, pw_precompose

__all__ = (
    "RieszHom",
    "PointEvaluation",
    "CoordinateProjection",
    "GridNodeEvaluation",
    "Reparameterization",
)


class RieszHom(ABC):
    """A lattice and algebra homomorphism from one model into another."""

    kind: ClassVar[str]
    source: ClassVar[str]
    target: ClassVar[type[Model]] = VectorModel

    @abstractmethod
    def _apply(self, x: Any) -> Any: ...

    @abstractmethod
    def params(self) -> dict[str, Any]: ...

    def check_source(self, model: type[Model]) -> None:
        if model.model_key != self.source:
            raise CarrierMismatchError(
                f"{self.kind} applies to {self.source} elements",
                left=self.source,
                right=model.model_key,
            )

    def __call__(self, x: Any) -> Any:
        return self._apply(x)

    def describe(self) -> dict[str, Any]:
        return {"kind": self.kind, **self.params()}


@dataclass(frozen=True)
class PointEvaluation(RieszHom):
    point: Fraction
    kind: ClassVar[str] = "point_evaluation"
    source: ClassVar[str] = "pwfun"

    def _apply(self, x: PiecewiseFunction) -> Vector:
        return Vector((pw_eval(x, self.point),))

    def params(self):
        return {"point": format_rational(self.point)}


@dataclass(frozen=True)
class CoordinateProjection(RieszHom):
    index: int
    kind: ClassVar[str] = "projection"
    source: ClassVar[str] = "vector"

    def _apply(self, x: Vector) -> Vector:
        if not 0 <= self.index < x.dim:
            raise DomainError("Projection index out of range", index=self.index, dim=x.dim)
        return Vector((x[self.index],))

    def params(self):
        return {"index": self.index}


@dataclass(frozen=True)
class GridNodeEvaluation(RieszHom):
    i: int
    j: int
    kind: ClassVar[str] = "grid_node"
    source: ClassVar[str] = "grid"

    def _apply(self, x: GridFunction) -> Vector:
        nx, ny = x.shape
        if not (0 <= self.i < nx and 0 <= self.j < ny):
            raise DomainError("Grid node out of range", i=self.i, j=self.j, shape=[nx, ny])
        return Vector((x.at(self.i, self.j),))

    def params(self):
        return {"i": self.i, "j": self.j}


@dataclass(frozen=True)
class Reparameterization(RieszHom):
    """``f ↦ f∘φ`` for a strictly increasing piecewise-linear φ onto the domain."""

    phi: PiecewiseFunction
    kind: ClassVar[str] = "precompose"
    source: ClassVar[str] = "pwfun"
    target: ClassVar[type[Model]] = PwModel

    def _apply(self, x: PiecewiseFunction) -> PiecewiseFunction:
        return pw_precompose(x, self.phi)

    def params(self):
        return {"phi": format_pw(self.phi)}
