"""
rieszkit.adapters.base - Shared plumbing for the file-format adapters.
"""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path
from typing import Any, ClassVar, TypeVar

from pydantic import BaseModel, ValidationError

from ..exceptions import BindingError, ParseError, RieszKitError

T = TypeVar("T", bound=BaseModel)

__all__ = ("FileAdapter",)

_TRUNCATE = 100


class FileAdapter:
    """Read a text format into a pydantic model and write it back.

    Subclasses set ``adapter_key``, ``parse_errors`` and implement ``_loads``
    and ``_dumps``.
    """

    adapter_key: ClassVar[str] = "base"
    parse_errors: ClassVar[tuple[type[Exception], ...]] = ()

    _error_mapping: ClassVar[dict[str, type[RieszKitError]]] = {
        "parse": ParseError,
        "validation": BindingError,
        "resource": BindingError,
    }

    @classmethod
    def _handle_error(cls, exc: Exception, category: str, **extra_details) -> None:
        """Wrap *exc* in the error class for *category*, keeping it as the cause."""
        error_class = cls._error_mapping.get(category, RieszKitError)
        details = {
            "category": category,
            "original_exception": exc.__class__.__name__,
            "format": cls.adapter_key,
        }
        for key in ("source", "data"):
            value = extra_details.get(key)
            if isinstance(value, (str, bytes)) and len(value) > _TRUNCATE:
                extra_details[key] = value[:_TRUNCATE]
        details.update(extra_details)
        raise error_class(str(exc), details=details, cause=exc) from exc

    # ---------------- incoming helpers
    @classmethod
    def _read_text(cls, obj: str | bytes | Path) -> str:
        if isinstance(obj, Path):
            try:
                text = obj.read_text()
            except OSError as e:
                cls._handle_error(e, "resource", resource=str(obj))
        else:
            text = obj.decode("utf-8") if isinstance(obj, bytes) else obj
        if not text or not text.strip():
            cls._handle_error(
                ValueError(f"Empty {cls.adapter_key.upper()} content"), "parse", source=text
            )
        return text

    @classmethod
    def _loads(cls, text: str) -> Any:  # pragma: no cover - overridden
        raise NotImplementedError

    @classmethod
    def _dumps(cls, data: Any) -> str:  # pragma: no cover - overridden
        raise NotImplementedError

    @classmethod
    def _parse(cls, text: str) -> Any:
        try:
            return cls._loads(text)
        except cls.parse_errors as e:
            cls._handle_error(e, "parse", source=text, **cls._error_position(e))

    @classmethod
    def _error_position(cls, exc: Exception) -> dict[str, Any]:
        return {}

    # ---------------- incoming
    @classmethod
    def from_obj(
        cls,
        subj_cls: type[T],
        obj: str | bytes | Path,
        /,
        *,
        adapt_meth: str | Callable = "model_validate",
    ) -> T:
        data = cls._parse(cls._read_text(obj))
        try:
            if callable(adapt_meth):
                return adapt_meth(data)
            return getattr(subj_cls, adapt_meth)(data)
        except ValidationError as e:
            cls._handle_error(e, "validation", data=repr(data), errors=e.errors())

    # ---------------- outgoing
    @classmethod
    def to_obj(cls, subj: BaseModel, /) -> str:
        return cls._dumps(subj.model_dump(mode="json"))
