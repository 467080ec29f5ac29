"""TOML adapter for binding files."""

from __future__ import annotations

from typing import Any

import toml

from .base import FileAdapter

__all__ = ("TomlAdapter",)


class TomlAdapter(FileAdapter):
    """
    TOML files with the same schemas as the JSON ones.

    Example:
        ```toml
        model = "pwfun"
        point = "1/4"

        [generators]
        g1 = "pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[0,1]]}"
        ```
    """

    adapter_key = "toml"

    # Declarative exception handling
    parse_errors = (toml.TomlDecodeError,)

    @classmethod
    def _loads(cls, text: str) -> Any:
        return toml.loads(text)

    @classmethod
    def _dumps(cls, data: Any) -> str:
        return toml.dumps(data)

    @classmethod
    def _error_position(cls, exc: Exception) -> dict[str, Any]:
        return {"line": getattr(exc, "lineno", None), "column": getattr(exc, "colno", None)}
