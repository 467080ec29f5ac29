"""
rieszkit.bimorph.forms - Bilinear forms and maps on ℚᵐ × ℚⁿ.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from typing_extensions import Self

from ..exceptions import DomainError
from ..models import Vector, VectorModel
from ..numeric import as_rational, format_rational
from ..numeric.rational import RationalLike

__all__ = (
    "BilinearForm",
    "BilinearMap",
    "Atom",
    "AtomBimorphism",
    "ConvergencePair",
)

AtomSpec = tuple[int, int] | tuple[int, int, RationalLike]


def _check_dims(x: Vector, y: Vector, m: int, n: int) -> None:
    if x.dim != m or y.dim != n:
        raise DomainError(
            "Arguments do not match the dimensions",
            expected=[m, n],
            actual=[x.dim, y.dim],
        )


@dataclass(frozen=True)
class BilinearForm:
    """``φ(x, y) = xᵀ·M·y`` for an ``m×n`` rational matrix M."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.matrix or not self.matrix[0]:
            raise DomainError("A bilinear form needs positive dimensions")
        if any(len(row) != len(self.matrix[0]) for row in self.matrix):
            raise DomainError("Ragged matrix", rows=[len(row) for row in self.matrix])

    @classmethod
    def of(cls, rows: Iterable[Iterable[RationalLike]]) -> Self:
        return cls(tuple(tuple(as_rational(v) for v in row) for row in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> Self:
        return cls(((Fraction(0),) * n,) * m)

    @classmethod
    def identity(cls, n: int) -> Self:
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.matrix[0])

    def __call__(self, x: Vector, y: Vector) -> Fraction:
        m, n = self.shape
        _check_dims(x, y, m, n)
        return sum(
            (
                x[i] * entry * y[j]
                for i, row in enumerate(self.matrix)
                for j, entry in enumerate(row)
                if entry
            ),
            Fraction(0),
        )

    def left(self, x: Vector) -> list[Fraction]:
        """``Mᵀx``: the linear functional ``y ↦ φ(x, y)`` as a row."""
        return [
            sum((a * b for a, b in zip(x, column)), Fraction(0))
            for column in zip(*self.matrix)
        ]

    def right(self, y: Vector) -> list[Fraction]:
        """``My``: the linear functional ``x ↦ φ(x, y)`` as a row."""
        return [
            sum((a * b for a, b in zip(row, y)), Fraction(0)) for row in self.matrix
        ]

    def scaled(self, c: RationalLike) -> BilinearForm:
        c = as_rational(c)
        return BilinearForm(tuple(tuple(c * v for v in row) for row in self.matrix))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.matrix for v in row)

    def is_positive(self) -> bool:
        return all(v >= 0 for row in self.matrix for v in row)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.matrix]


@dataclass(frozen=True)
class BilinearMap:
    """A bilinear map into ℚᵏ given by one form per output coordinate."""

    forms: tuple[BilinearForm, ...]

    def __post_init__(self):
        if not self.forms:
            raise DomainError("A bilinear map needs at least one output coordinate")
        if len({form.shape for form in self.forms}) != 1:
            raise DomainError("Coordinate forms disagree on dimensions")

    @property
    def dims(self) -> tuple[int, int, int]:
        m, n = self.forms[0].shape
        return m, n, len(self.forms)

    def __call__(self, x: Vector, y: Vector) -> Vector:
        return Vector(tuple(form(x, y) for form in self.forms))

    def is_positive(self) -> bool:
        return all(form.is_positive() for form in self.forms)

    def to_map(self) -> BilinearMap:
        return self


@dataclass(frozen=True)
class Atom:
    i: int
    j: int
    c: Fraction = Fraction(1)


@dataclass(frozen=True)
class AtomBimorphism:
    """``T(x, y)_r = c_r·x_{i_r}·y_{j_r}`` with every ``c_r ≥ 0``.

    The all-ones vectors are the units ``e₁ ∈ ℚᵐ``, ``e₂ ∈ ℚⁿ`` and
    ``e_B ∈ ℚᵏ``.
    """

    m: int
    n: int
    atoms: tuple[Atom, ...]

    def __post_init__(self):
        if self.m <= 0 or self.n <= 0 or not self.atoms:
            raise DomainError(
                "Dimensions must be positive", m=self.m, n=self.n, k=len(self.atoms)
            )
        for r, atom in enumerate(self.atoms):
            if not (0 <= atom.i < self.m and 0 <= atom.j < self.n):
                raise DomainError(
                    "Atom index out of range", coordinate=r, i=atom.i, j=atom.j
                )
            if atom.c < 0:
                raise DomainError(
                    "Atom coefficients must be nonnegative", coordinate=r, c=atom.c
                )

    @classmethod
    def of(cls, m: int, n: int, atoms: Sequence[AtomSpec]) -> Self:
        """Atoms as ``(i, j)`` or ``(i, j, c)`` triples; c defaults to 1."""
        return cls(
            m,
            n,
            tuple(
                Atom(a[0], a[1], as_rational(a[2]) if len(a) > 2 else Fraction(1))
                for a in atoms
            ),
        )

    @property
    def k(self) -> int:
        return len(self.atoms)

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.m, self.n, self.k

    def __call__(self, x: Vector, y: Vector) -> Vector:
        _check_dims(x, y, self.m, self.n)
        return Vector(tuple(a.c * x[a.i] * y[a.j] for a in self.atoms))

    def units(self) -> tuple[Vector, Vector, Vector]:
        unit = VectorModel.unit
        return unit(self.m), unit(self.n), unit(self.k)

    def is_unit_preserving(self) -> bool:
        e1, e2, e_b = self.units()
        return self(e1, e2) == e_b

    def coordinate(self, r: int) -> AtomBimorphism:
        """Composition with the projection onto coordinate ``r``."""
        return AtomBimorphism(self.m, self.n, (self.atoms[r],))

    def form(self, r: int = 0) -> BilinearForm:
        atom = self.atoms[r]
        return BilinearForm(
            tuple(
                tuple(
                    atom.c if (p, q) == (atom.i, atom.j) else Fraction(0)
                    for q in range(self.n)
                )
                for p in range(self.m)
            )
        )

    def to_map(self) -> BilinearMap:
        return BilinearMap(tuple(self.form(r) for r in range(self.k)))

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "atoms": [[a.i, a.j, format_rational(a.c)] for a in self.atoms],
        }


@dataclass(frozen=True)
class ConvergencePair:
    """Base elements ``f, g`` with regulators ``u, v`` and the bound ``w = |g| + v``.

    The sequences are ``fₙ = f + u/n`` and ``gₙ = g + v/n``, so ``|gₙ| ≤ w``
    for every ``n ≥ 1``.
    """

    f: Vector
    g: Vector
    u: Vector
    v: Vector

    def __post_init__(self):
        dims = {x.dim for x in (self.f, self.g, self.u, self.v)}
        if len(dims) != 1:
            raise DomainError(
                "Convergence pair elements differ in dimension", dims=sorted(dims)
            )
        if any(c < 0 for c in (*self.u, *self.v)):
            raise DomainError("Regulators must be positive")

    @property
    def w(self) -> Vector:
        return VectorModel.add(VectorModel.abs(self.g), self.v)

    def terms(self, n: int) -> tuple[Vector, Vector]:
        step = Fraction(1, n)
        return (
            VectorModel.add(self.f, VectorModel.scale(step, self.u)),
            VectorModel.add(self.g, VectorModel.scale(step, self.v)),
        )
