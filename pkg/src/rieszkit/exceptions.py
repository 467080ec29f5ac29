"""
rieszkit.exceptions - Exception hierarchy for the kernel.

Every subclass maps to a stable CLI exit code (see ``default_exit_code``).
"""

from __future__ import annotations

from typing import Any

from .types import BaseError

__all__ = (
    "RieszKitError",
    "ParseError",
    "BindingError",
    "CarrierMismatchError",
    "DomainError",
    "CheckFailure",
    "HypothesisFailure",
    "BudgetError",
    "FuelExhaustedError",
    "ConfigurationError",
    "ModelNotFoundError",
    "KERNEL_PYTHON_ERRORS",
)

KERNEL_PYTHON_ERRORS = (KeyError, ValueError, ZeroDivisionError, TypeError)


class RieszKitError(BaseError):
    """Base exception for all rieszkit errors."""

    default_message = "rieszkit error"
    default_exit_code = 1
    __slots__ = ()

    def __init__(
        self,
        message: str | None = None,
        *,
        model: str | None = None,
        details: dict[str, Any] | None = None,
        exit_code: int | None = None,
        cause: Exception | None = None,
        **extra_context: Any,
    ):
        details = details or {}
        if model:
            details["model"] = model
        details.update(extra_context)
        super().__init__(message, details=details, exit_code=exit_code, cause=cause)


class ParseError(RieszKitError):
    """Raised when expression, polynomial or function text cannot be parsed."""

    default_message = "Parse failed"
    default_exit_code = 2
    __slots__ = ()

    def __init__(
        self,
        message: str | None = None,
        *,
        source: str | None = None,
        position: int | None = None,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
        **extra_context: Any,
    ):
        details = details or {}
        params = {"source": source, "position": position}
        details.update({k: v for k, v in params.items() if v is not None})
        super().__init__(message, details=details, cause=cause, **extra_context)


class BindingError(RieszKitError):
    """Raised when generators are unbound or a binding file is unusable."""

    default_message = "Binding invalid"
    default_exit_code = 3
    __slots__ = ()


class CarrierMismatchError(BindingError):
    """Raised when two model elements do not share a carrier."""

    default_message = "Carrier mismatch"
    __slots__ = ()

    def __init__(
        self,
        message: str | None = None,
        *,
        left: Any | None = None,
        right: Any | None = None,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
        **extra_context: Any,
    ):
        details = details or {}
        params = {"left": left, "right": right}
        details.update({k: v for k, v in params.items() if v is not None})
        super().__init__(message, details=details, cause=cause, **extra_context)


class DomainError(RieszKitError):
    """Raised when an argument lies outside an operation's domain."""

    default_message = "Argument outside domain"
    default_exit_code = 3
    __slots__ = ()


class CheckFailure(RieszKitError):
    """Raised when an exact model check disagrees."""

    default_message = "Check failed"
    default_exit_code = 4
    __slots__ = ()

    def __init__(
        self,
        message: str | None = None,
        *,
        counterexample: dict[str, Any] | None = None,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
        **extra_context: Any,
    ):
        details = details or {}
        if counterexample is not None:
            details["counterexample"] = counterexample
        super().__init__(message, details=details, cause=cause, **extra_context)


class HypothesisFailure(RieszKitError):
    """Raised when the hypothesis of a lab check is not met by its input."""

    default_message = "hypothesis failure"
    default_exit_code = 4
    __slots__ = ()


class BudgetError(RieszKitError):
    """Raised when a degree, bit-length, term, piece or dimension cap is exceeded."""

    default_message = "Budget exceeded"
    default_exit_code = 5
    __slots__ = ()

    def __init__(
        self,
        message: str | None = None,
        *,
        budget: str | None = None,
        limit: int | None = None,
        actual: int | None = None,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
        **extra_context: Any,
    ):
        details = details or {}
        params = {"budget": budget, "limit": limit, "actual": actual}
        details.update({k: v for k, v in params.items() if v is not None})
        super().__init__(message, details=details, cause=cause, **extra_context)


class FuelExhaustedError(BudgetError):
    """Raised when the product rewriter runs out of recursion fuel."""

    default_message = "Rewriter fuel exhausted"
    __slots__ = ()


class ConfigurationError(RieszKitError):
    """Raised when a run configuration is invalid."""

    default_message = "Configuration invalid"
    default_exit_code = 1
    __slots__ = ()

    def __init__(
        self,
        message: str | None = None,
        *,
        config: dict[str, Any] | None = None,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
        **extra_context: Any,
    ):
        details = details or {}
        if config is not None:
            details["config"] = config
        super().__init__(message, details=details, cause=cause, **extra_context)


class ModelNotFoundError(RieszKitError):
    """Raised when no model is registered under a key."""

    default_message = "Model not found"
    default_exit_code = 3
    __slots__ = ()

    def __init__(
        self,
        message: str | None = None,
        *,
        model_key: str | None = None,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
        **extra_context: Any,
    ):
        details = details or {}
        if model_key is not None:
            details["model_key"] = model_key
        super().__init__(message, details=details, cause=cause, **extra_context)
