"""rieszkit - exact kernel for Archimedean Riesz spaces and f-algebras."""

from .config import Budget, RunConfig, budget_scope
from .core import Model, ModelBase, ModelRegistry, default_registry
from .exceptions import (
    BindingError,
    BudgetError,
    CheckFailure,
    DomainError,
    HypothesisFailure,
    ParseError,
    RieszKitError,
)
from .expr import ModelBinding, eval_in_model, parse_expr, print_expr
from .rewrite import Certificate, make_certificate, product_rewrite

__all__ = (
    "BindingError",
    "Budget",
    "BudgetError",
    "Certificate",
    "CheckFailure",
    "DomainError",
    "HypothesisFailure",
    "Model",
    "ModelBase",
    "ModelBinding",
    "ModelRegistry",
    "ParseError",
    "RieszKitError",
    "RunConfig",
    "budget_scope",
    "default_registry",
    "eval_in_model",
    "make_certificate",
    "parse_expr",
    "print_expr",
    "product_rewrite",
)

__version__ = "0.1.0"
