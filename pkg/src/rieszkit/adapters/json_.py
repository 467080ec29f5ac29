"""JSON adapter built on orjson."""

from __future__ import annotations

from typing import Any

import orjson

from .base import FileAdapter

__all__ = ("JsonAdapter",)


class JsonAdapter(FileAdapter):
    """
    JSON files: bindings, tensor bindings, certificates and reports.

    Example:
        ```python
        binding = JsonAdapter.from_obj(BindingFile, Path("gens.json"))
        text = JsonAdapter.to_obj(report)
        ```
    """

    adapter_key = "json"

    # Declarative exception handling
    parse_errors = (orjson.JSONDecodeError,)

    @classmethod
    def _loads(cls, text: str) -> Any:
        return orjson.loads(text)

    @classmethod
    def _dumps(cls, data: Any) -> str:
        option = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_APPEND_NEWLINE
        return orjson.dumps(data, option=option).decode("utf-8")

    @classmethod
    def _error_position(cls, exc: Exception) -> dict[str, Any]:
        return {"position": exc.pos, "line": exc.lineno, "column": exc.colno}
