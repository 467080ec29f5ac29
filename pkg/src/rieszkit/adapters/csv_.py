"""CSV dumps of grid functions, the only non-JSON output."""

from __future__ import annotations

import csv
import io
from collections.abc import Mapping
from pathlib import Path

from ..exceptions import CarrierMismatchError, ParseError
from ..models import GridFunction
from ..numeric import format_rational, parse_rational

__all__ = ("CsvAdapter",)

_AXES = ("i", "j", "x", "y")


class CsvAdapter:
    """
    One row per grid node, one value column per named grid function.

    Example:
        ```python
        text = CsvAdapter.to_obj({"lhs": lhs_grid, "rhs": rhs_grid})
        grids = CsvAdapter.from_obj(text)
        ```
    """

    adapter_key = "csv"

    # Declarative exception handling
    parse_errors = (csv.Error,)

    @classmethod
    def to_obj(cls, columns: Mapping[str, GridFunction], /) -> str:
        names = list(columns)
        grids = [columns[name] for name in names]
        if not grids:
            return ",".join(_AXES) + "\n"
        first = grids[0]
        for name, grid in zip(names, grids):
            if (grid.xs, grid.ys) != (first.xs, first.ys):
                raise CarrierMismatchError(f"Grid {name!r} uses different axes")
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([*_AXES, *names])
        for i, j, x, y, _ in first.nodes():
            writer.writerow(
                [i, j, format_rational(x), format_rational(y)]
                + [format_rational(grid.at(i, j)) for grid in grids]
            )
        return buffer.getvalue()

    @classmethod
    def from_obj(cls, obj: str | Path, /) -> dict[str, GridFunction]:
        text = obj.read_text() if isinstance(obj, Path) else obj
        try:
            rows = list(csv.DictReader(io.StringIO(text)))
        except cls.parse_errors as e:
            raise ParseError("Malformed CSV", source=text[:100], cause=e) from e
        if not rows:
            raise ParseError("CSV has no rows", source=text[:100])
        names = [key for key in rows[0] if key not in _AXES]
        try:
            xs = sorted({parse_rational(row["x"]) for row in rows})
            ys = sorted({parse_rational(row["y"]) for row in rows})
            cells = {(int(row["i"]), int(row["j"])): row for row in rows}
            return {
                name: GridFunction(
                    tuple(xs),
                    tuple(ys),
                    tuple(
                        tuple(
                            parse_rational(cells[i, j][name]) for j in range(len(ys))
                        )
                        for i in range(len(xs))
                    ),
                )
                for name in names
            }
        except (KeyError, ValueError) as e:
            raise ParseError("CSV is not a grid dump", source=text[:100], cause=e) from e
