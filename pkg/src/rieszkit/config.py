# config.py
from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from pathlib import Path
from typing import Any, Literal

import toml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .exceptions import ConfigurationError

__all__ = ("Budget", "RunConfig", "active_budget", "budget_scope", "load_run_config")


class Budget(BaseModel):
    """Caps that make coefficient or size growth fail loudly."""

    model_config = ConfigDict(frozen=True)

    degree_cap: int = Field(default=64, gt=0)
    bits_cap: int = Field(default=4096, gt=0)
    term_cap: int = Field(default=512, gt=0)  # SeparableTensor terms
    piece_cap: int = Field(default=4096, gt=0)  # PiecewiseFunction pieces
    dimension_cap: int = Field(default=256, gt=0)  # ladder levels
    fuel: int | None = Field(default=None, gt=0)  # None: derived from operand sizes


_ACTIVE_BUDGET: ContextVar[Budget] = ContextVar("rieszkit_budget", default=Budget())


def active_budget() -> Budget:
    """Return the budget installed for the current context."""
    return _ACTIVE_BUDGET.get()


@contextmanager
def budget_scope(budget: Budget) -> Iterator[Budget]:
    """Install *budget* for the duration of the block."""
    token = _ACTIVE_BUDGET.set(budget)
    try:
        yield budget
    finally:
        _ACTIVE_BUDGET.reset(token)


ModelKind = Literal["vector", "pwfun", "grid"]


class RunConfig(BaseModel):
    """Everything a CLI run depends on; identical configs give identical outputs."""

    model_config = ConfigDict(frozen=True)

    seed: int = 0
    trials: int = Field(default=20, gt=0)
    budget: Budget = Field(default_factory=Budget)
    grid: tuple[int, int] = (16, 16)
    models: tuple[ModelKind, ...] = ("vector", "pwfun")
    vector_dim: int = Field(default=6, gt=0)
    probe_count: int = Field(default=4, ge=0)
    out: Path | None = None

    @field_validator("grid")
    @classmethod
    def validate_grid(cls, v):
        """Grid sizes must be positive."""
        if v[0] <= 0 or v[1] <= 0:
            raise ValueError("Grid sizes must be positive")
        return v

    def with_overrides(self, **overrides: Any) -> RunConfig:
        """Return a copy with non-None *overrides* applied and re-validated."""
        data = self.model_dump()
        budget = dict(data.pop("budget"))
        for key, value in overrides.items():
            if value is None:
                continue
            if key in Budget.model_fields:
                budget[key] = value
            else:
                data[key] = value
        return _validated({**data, "budget": budget})


def _validated(data: dict[str, Any]) -> RunConfig:
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigurationError(
            "Invalid run configuration", config=data, errors=exc.errors(), cause=exc
        ) from exc


def load_run_config(path: Path | None = None) -> RunConfig:
    """Load a RunConfig from a TOML file, or defaults when *path* is None."""
    if path is None:
        return RunConfig()
    try:
        data = toml.loads(path.read_text())
    except (OSError, toml.TomlDecodeError) as exc:
        raise ConfigurationError(
            f"Cannot read configuration file {path}", resource=str(path), cause=exc
        ) from exc
    return _validated(data.get("rieszkit", data))
