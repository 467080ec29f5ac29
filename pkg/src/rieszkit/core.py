"""
rieszkit.core - Model protocol, ModelBase and ModelRegistry.

A *model* is a concrete unital f-algebra in which expressions are evaluated.
Models are stateless: every element carries its own carrier (dimension,
domain or grid), and operations are classmethods, so one model class serves
every carrier.
"""

from __future__ import annotations

from collections.abc import Hashable
from fractions import Fraction
from typing import Any, ClassVar, Protocol, TypeVar, runtime_checkable

from .exceptions import CarrierMismatchError, ConfigurationError, ModelNotFoundError

T = TypeVar("T")

__all__ = ("Model", "ModelBase", "ModelRegistry", "default_registry")


# -------------------------------------------------------------------- Model
@runtime_checkable
class Model(Protocol[T]):
    """
    Protocol for exact f-algebra models.

    Attributes:
        model_key: Unique identifier ("vector", "pwfun", "grid")
        unital: Whether the model has a unit element
        semiprime: Whether the model has no nonzero nilpotents
    """

    model_key: ClassVar[str]
    unital: ClassVar[bool]
    semiprime: ClassVar[bool]

    @classmethod
    def carrier_of(cls, x: T) -> Hashable:
        """Carrier of an element; two elements combine only on equal carriers."""
        ...

    @classmethod
    def unit(cls, carrier: Hashable) -> T: ...

    @classmethod
    def zero(cls, carrier: Hashable) -> T: ...

    @classmethod
    def add(cls, x: T, y: T) -> T: ...

    @classmethod
    def scale(cls, c: Fraction, x: T) -> T: ...

    @classmethod
    def mul(cls, x: T, y: T) -> T: ...

    @classmethod
    def abs(cls, x: T) -> T: ...

    @classmethod
    def equal(cls, x: T, y: T) -> bool: ...

    @classmethod
    def to_json(cls, x: T) -> Any:
        """JSON-ready representation of an element."""
        ...


# ---------------------------------------------------------------- ModelBase
class ModelBase:
    """Lattice operations derived from ``abs``; carrier checks shared by every model."""

    model_key: str = "base"
    unital: ClassVar[bool] = True
    semiprime: ClassVar[bool] = True

    @classmethod
    def _check_carrier(cls, x: Any, y: Any) -> Hashable:
        left, right = cls.carrier_of(x), cls.carrier_of(y)
        if left != right:
            raise CarrierMismatchError(
                "Elements do not share a carrier",
                model=cls.model_key,
                left=str(left),
                right=str(right),
            )
        return left

    @classmethod
    def carrier_of(cls, x: Any) -> Hashable:  # pragma: no cover - overridden
        raise NotImplementedError

    @classmethod
    def sub(cls, x, y):
        return cls.add(x, cls.scale(Fraction(-1), y))

    @classmethod
    def pos(cls, x):
        """``x⁺ = (x + |x|)/2``."""
        return cls.scale(Fraction(1, 2), cls.add(x, cls.abs(x)))

    @classmethod
    def neg(cls, x):
        """``x⁻ = (|x| - x)/2``."""
        return cls.scale(Fraction(1, 2), cls.sub(cls.abs(x), x))

    @classmethod
    def meet(cls, x, y):
        """``x ∧ y = (x + y - |x - y|)/2``."""
        return cls.scale(Fraction(1, 2), cls.sub(cls.add(x, y), cls.abs(cls.sub(x, y))))

    @classmethod
    def join(cls, x, y):
        """``x ∨ y = (x + y + |x - y|)/2``."""
        return cls.scale(Fraction(1, 2), cls.add(cls.add(x, y), cls.abs(cls.sub(x, y))))

    @classmethod
    def leq(cls, x, y) -> bool:
        """``x ≤ y`` iff ``(y - x)⁻ = 0``."""
        diff = cls.sub(y, x)
        return cls.equal(cls.neg(diff), cls.zero(cls.carrier_of(diff)))


# ------------------------------------------------------------ ModelRegistry
class ModelRegistry:
    """Registry for evaluation models."""

    def __init__(self) -> None:
        self._reg: dict[str, type[Model]] = {}

    def register(self, model_cls: type[Model]) -> None:
        """Register model class (must define model_key)."""
        key = getattr(model_cls, "model_key", None)
        if not key or key == "base":
            raise ConfigurationError(
                "Model must define 'model_key'", model_class=model_cls.__name__
            )
        self._reg[key] = model_cls

    def get(self, model_key: str) -> type[Model]:
        """Retrieve model class by key."""
        try:
            return self._reg[model_key]
        except KeyError as exc:
            raise ModelNotFoundError(
                f"No model registered for '{model_key}'", model_key=model_key
            ) from exc

    def keys(self) -> tuple[str, ...]:
        return tuple(sorted(self._reg))

    def __contains__(self, model_key: object) -> bool:
        return model_key in self._reg


def default_registry() -> ModelRegistry:
    """A fresh registry holding the bundled vector, pwfun and grid models."""
    from .models import GridModel, PwModel, VectorModel

    registry = ModelRegistry()
    for model_cls in (VectorModel, PwModel, GridModel):
        registry.register(model_cls)
    return registry
