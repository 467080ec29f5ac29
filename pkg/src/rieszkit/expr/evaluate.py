"""
rieszkit.expr.evaluate - Homomorphic evaluation of expressions in a model.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Mapping
from dataclasses import dataclass, field
from typing import Any

from ..core import Model
from ..exceptions import BindingError, CarrierMismatchError
from .ast import (
    Abs,
    Add,
    Expr,
    Gen,
    Join,
    Meet,
    Mul,
    NegPart,
    Pos,
    Scale,
    Unit,
    fold,
    generators_of,
)

__all__ = ("ModelBinding", "eval_in_model")

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelBinding:
    """Generator names bound to elements of one model on one carrier.

    ``carrier`` may be omitted when at least one generator is bound; it is
    then taken from the first element.
    """

    model: type[Model]
    generators: Mapping[str, Any]
    carrier: Hashable = None
    params: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        carriers = {name: self.model.carrier_of(x) for name, x in self.generators.items()}
        carrier = self.carrier
        if carrier is None:
            if not carriers:
                raise BindingError(
                    "An empty binding needs an explicit carrier",
                    model=self.model.model_key,
                )
            carrier = next(iter(carriers.values()))
            object.__setattr__(self, "carrier", carrier)
        for name, other in carriers.items():
            if other != carrier:
                raise CarrierMismatchError(
                    f"Generator {name!r} lives on a different carrier",
                    model=self.model.model_key,
                    left=str(carrier),
                    right=str(other),
                )

    @property
    def kind(self) -> str:
        return self.model.model_key

    def element(self, name: str) -> Any:
        try:
            return self.generators[name]
        except KeyError:
            raise BindingError(
                f"Generator {name!r} is not bound",
                model=self.kind,
                generator=name,
                bound=sorted(self.generators),
            ) from None

    def check_covers(self, e: Expr) -> None:
        missing = sorted(generators_of(e) - set(self.generators))
        if missing:
            raise BindingError(
                f"Unbound generators: {', '.join(missing)}", model=self.kind, missing=missing
            )

    def with_generators(self, generators: Mapping[str, Any]) -> ModelBinding:
        return ModelBinding(self.model, generators, self.carrier, self.params)


def eval_in_model(e: Expr, binding: ModelBinding) -> Any:
    """Evaluate *e* exactly; shared subterms are evaluated once."""
    model = binding.model

    def step(node: Expr, kids: tuple[Any, ...]) -> Any:
        match node:
            case Gen(name=name):
                return binding.element(name)
            case Unit():
                if not model.unital:
                    raise BindingError("Unit used in a non-unital model", model=binding.kind)
                return model.unit(binding.carrier)
            case Scale(c=c):
                return model.scale(c, kids[0])
            case Add():
                return model.add(*kids)
            case Mul():
                return model.mul(*kids)
            case Abs():
                return model.abs(kids[0])
            case Pos():
                return model.pos(kids[0])
            case NegPart():
                return model.neg(kids[0])
            case Meet():
                return model.meet(*kids)
            case Join():
                return model.join(*kids)
        raise TypeError(f"Unknown node kind {node.kind}")  # pragma: no cover

    return fold(e, step)
