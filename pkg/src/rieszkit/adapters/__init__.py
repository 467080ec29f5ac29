"""File-format adapters for bindings, reports and grid dumps."""

from __future__ import annotations

from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel

from ..exceptions import BindingError
from .base import FileAdapter
from .csv_ import CsvAdapter
from .json_ import JsonAdapter
from .toml_ import TomlAdapter
from .yaml_ import YamlAdapter

T = TypeVar("T", bound=BaseModel)

__all__ = (
    "CsvAdapter",
    "FileAdapter",
    "JsonAdapter",
    "TomlAdapter",
    "YamlAdapter",
    "adapter_for",
    "load_file",
)

_BY_SUFFIX: dict[str, type[FileAdapter]] = {
    ".json": JsonAdapter,
    ".yaml": YamlAdapter,
    ".yml": YamlAdapter,
    ".toml": TomlAdapter,
}


def adapter_for(path: Path) -> type[FileAdapter]:
    """Adapter chosen by file suffix."""
    try:
        return _BY_SUFFIX[path.suffix.lower()]
    except KeyError:
        raise BindingError(
            f"Unsupported file type {path.suffix!r}",
            resource=str(path),
            supported=sorted(_BY_SUFFIX),
        ) from None


def load_file(subj_cls: type[T], path: Path) -> T:
    return adapter_for(path).from_obj(subj_cls, path)
