"""
rieszkit.bindings - Binding file schemas.

A binding file names one model and binds generator names to elements in
that model's JSON form::

    {"model": "pwfun", "point": "1/4",
     "generators": {"g1": "pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[0,1]]}"}}

A tensor binding file binds generator names to one ``{x, y}`` factor pair
or a list of them (a sum), plus a grid::

    {"generators": {"t1": {"x": "pw{...}", "y": "pw{...}"}},
     "grid": {"nx": 8, "ny": 8, "xdomain": ["0", "1"], "ydomain": ["0", "1"]}}
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from .config import ModelKind
from .core import ModelRegistry, default_registry
from .exceptions import KERNEL_PYTHON_ERRORS, BindingError, RieszKitError
from .expr import ModelBinding
from .numeric import as_rational, format_rational
from .pwfun import parse_pw
from .tensor import SeparableTensor, TensorBinding

__all__ = ("BindingFile", "GridSpec", "TensorBindingFile", "TensorTermSpec")


def _rational_pair(pair: tuple[str, str]) -> tuple[Fraction, Fraction]:
    return as_rational(pair[0]), as_rational(pair[1])


class BindingFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: ModelKind = "pwfun"
    generators: dict[str, Any] = Field(default_factory=dict)
    domain: tuple[str, str] | None = None
    dimension: int | None = Field(default=None, gt=0)
    point: str | None = None

    def carrier(self) -> Any:
        if self.model == "pwfun" and self.domain is not None:
            return _rational_pair(self.domain)
        if self.model == "vector" and self.dimension is not None:
            return self.dimension
        return None

    def to_binding(self, registry: ModelRegistry | None = None) -> ModelBinding:
        """Decode every generator; decoding failures become BindingError."""
        model = (registry or default_registry()).get(self.model)
        elements = {}
        for name, data in sorted(self.generators.items()):
            try:
                elements[name] = model.from_json(data)
            except (RieszKitError, *KERNEL_PYTHON_ERRORS) as exc:
                raise BindingError(
                    f"Cannot decode generator {name!r}",
                    model=self.model,
                    generator=name,
                    cause=exc,
                ) from exc
        return ModelBinding(model, elements, self.carrier(), params={"source": "file"})

    def evaluation_point(self) -> Fraction | None:
        if self.point is None:
            return None
        try:
            return as_rational(self.point)
        except (RieszKitError, *KERNEL_PYTHON_ERRORS) as exc:
            raise BindingError("Invalid evaluation point", point=self.point, cause=exc) from exc


class TensorTermSpec(BaseModel):
    x: str
    y: str


class GridSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    nx: int = Field(default=16, gt=0)
    ny: int = Field(default=16, gt=0)
    xdomain: tuple[str, str] = ("0", "1")
    ydomain: tuple[str, str] = ("0", "1")

    @property
    def shape(self) -> tuple[int, int]:
        return self.nx, self.ny


class TensorBindingFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    generators: dict[str, TensorTermSpec | list[TensorTermSpec]] = Field(default_factory=dict)
    grid: GridSpec = Field(default_factory=GridSpec)

    def to_binding(self) -> TensorBinding:
        xdomain = _rational_pair(self.grid.xdomain)
        ydomain = _rational_pair(self.grid.ydomain)
        tensors = {}
        for name, spec in sorted(self.generators.items()):
            terms = spec if isinstance(spec, list) else [spec]
            try:
                tensors[name] = SeparableTensor.of(
                    xdomain, ydomain, [(parse_pw(t.x), parse_pw(t.y)) for t in terms]
                )
            except RieszKitError as exc:
                raise BindingError(
                    f"Cannot decode tensor generator {name!r}",
                    generator=name,
                    xdomain=[format_rational(v) for v in xdomain],
                    ydomain=[format_rational(v) for v in ydomain],
                    cause=exc,
                ) from exc
        return TensorBinding(xdomain, ydomain, tensors)
