"""YAML adapter for binding files."""

from __future__ import annotations

from typing import Any

import yaml

from .base import FileAdapter

__all__ = ("YamlAdapter",)


class YamlAdapter(FileAdapter):
    """
    YAML files with the same schemas as the JSON ones.

    Rationals must be quoted (``"1/2"``); YAML would otherwise read ``0.5``
    as a float, which the kernel rejects.
    """

    adapter_key = "yaml"

    # Declarative exception handling
    parse_errors = (yaml.YAMLError,)

    @classmethod
    def _loads(cls, text: str) -> Any:
        return yaml.safe_load(text)

    @classmethod
    def _dumps(cls, data: Any) -> str:
        return yaml.safe_dump(
            data, default_flow_style=False, allow_unicode=True, sort_keys=True
        )
