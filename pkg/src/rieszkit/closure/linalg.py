"""Dense exact linear algebra over ℚ (row echelon form, solve, rank, kernel)."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

__all__ = ("Matrix", "row_echelon", "rank", "solve", "nullspace", "transpose")

Matrix = list[list[Fraction]]


def _copy(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[Fraction(v) for v in row] for row in m]


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def row_echelon(m: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction] | None = None):
    """Reduced row echelon form.

    Returns ``(rows, rhs, pivots)`` where ``pivots[r]`` is the pivot column of
    row ``r``; *rhs* is carried through the same row operations.
    """
    rows = _copy(m)
    t = [Fraction(v) for v in rhs] if rhs is not None else None
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i in range(piv_r, n_rows):
            if rows[i][piv_c] != 0:
                break
        else:
            continue
        if i != piv_r:
            rows[piv_r], rows[i] = rows[i], rows[piv_r]
            if t is not None:
                t[piv_r], t[i] = t[i], t[piv_r]
        fp = rows[piv_r][piv_c]
        if fp != 1:
            rows[piv_r] = [v / fp for v in rows[piv_r]]
            if t is not None:
                t[piv_r] /= fp
        for r in range(n_rows):
            fr = rows[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            rows[r] = [a - fr * b for a, b in zip(rows[r], rows[piv_r])]
            if t is not None:
                t[r] -= fr * t[piv_r]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return rows, t, pivots


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    return len(row_echelon(m)[2])


def solve(m: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One solution of ``m·x = rhs`` (free variables set to 0), or None."""
    rows, t, pivots = row_echelon(m, rhs)
    n_cols = len(m[0]) if m else 0
    if any(t[r] != 0 for r in range(len(pivots), len(rows))):
        return None
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = t[r]
    return x


def nullspace(m: Sequence[Sequence[Fraction]], n_cols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : m·x = 0}``."""
    n_cols = n_cols if n_cols is not None else (len(m[0]) if m else 0)
    if not m:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    rows, _, pivots = row_echelon(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for r, c in enumerate(pivots):
            x[c] = -rows[r][f]
        basis.append(x)
    return basis
