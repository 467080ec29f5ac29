"""
rieszkit.bimorph.lab - Exact finite-dimensional checks on bilinear maps.

* proportionality: ``ψ = λφ`` or a pair with ``φ(x,y) = 0 ≠ ψ(x,y)``;
* lattice-bimorphism laws of a bilinear map;
* multiplicativity of unit-preserving atom bimorphisms;
* the relatively uniform convergence bound for positive bilinear maps.

Every check returns a :class:`LabReport`; a report is truthy iff it passed.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from ..closure.linalg import nullspace
from ..exceptions import DomainError, HypothesisFailure
from ..models import Vector, VectorModel
from ..numeric import format_rational
from ..sampling import random_rational, random_vector, substream
from .forms import AtomBimorphism, BilinearForm, BilinearMap, ConvergencePair

__all__ = (
    "LabReport",
    "Proportional",
    "KernelWitness",
    "Inconclusive",
    "proportionality",
    "proportionality_report",
    "check_bimorphism",
    "check_multiplicative",
    "exhaustive_multiplicative",
    "convergence_bound_check",
    "azz_scaling_check",
    "functional_reduction_check",
)

logger = logging.getLogger(__name__)

WITNESS_ATTEMPTS = 64
SMALL_LATTICE = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2))


class LabReport(BaseModel):
    check: str
    dims: list[int]
    seed: int | None = None
    trials: int | None = None
    result: bool
    witness: dict[str, Any] | None = None

    def __bool__(self) -> bool:
        return self.result


def _vec(x: Vector | list[Fraction]) -> list[str]:
    return [format_rational(v) for v in x]


def _basis(dim: int, index: int) -> Vector:
    return Vector(tuple(Fraction(int(i == index)) for i in range(dim)))


# ----------------------------------------------------------- proportionality
@dataclass(frozen=True)
class Proportional:
    lam: Fraction


@dataclass(frozen=True)
class KernelWitness:
    """``φ(x, y) = 0`` but ``ψ(x, y) ≠ 0``, so N(φ) is not inside N(ψ)."""

    x: Vector
    y: Vector
    phi_value: Fraction
    psi_value: Fraction


@dataclass(frozen=True)
class Inconclusive:
    attempts: tuple[dict[str, Any], ...]


ProportionalityResult = Proportional | KernelWitness | Inconclusive


def _ratio(phi: BilinearForm, psi: BilinearForm) -> Fraction | None:
    """λ with ``ψ = λφ`` entrywise, or None."""
    pivot = next(
        (
            (a, b)
            for row_a, row_b in zip(phi.matrix, psi.matrix)
            for a, b in zip(row_a, row_b)
            if a != 0
        ),
        None,
    )
    if pivot is None:
        return Fraction(0) if psi.is_zero() else None
    lam = pivot[1] / pivot[0]
    return lam if psi == phi.scaled(lam) else None


def _separating(a: list[Fraction], b: list[Fraction]) -> list[Fraction] | None:
    """y with ``a·y = 0`` and ``b·y ≠ 0``; None when b is a multiple of a."""
    for y in nullspace([a], len(a)):
        if sum((p * q for p, q in zip(b, y)), Fraction(0)) != 0:
            return y
    return None


def _verified(
    phi: BilinearForm, psi: BilinearForm, x: Vector, y: Vector
) -> KernelWitness:
    phi_value, psi_value = phi(x, y), psi(x, y)
    if phi_value != 0 or psi_value == 0:  # pragma: no cover - by construction
        raise DomainError("Kernel witness failed verification", x=_vec(x), y=_vec(y))
    return KernelWitness(x, y, phi_value, psi_value)


def proportionality(
    phi: BilinearForm,
    psi: BilinearForm,
    *,
    seed: int = 0,
    attempts: int = WITNESS_ATTEMPTS,
) -> ProportionalityResult:
    """``Proportional(λ)`` when ``ψ = λφ``, else an exactly verified kernel witness.

    The witness search fixes x (the unit and basis vectors first, then
    seeded random vectors), so that ``y ↦ φ(x, y)`` and ``y ↦ ψ(x, y)`` are
    linear functionals a, b; any y in the kernel of a but not of b works.
    Each attempt also tries the search with the arguments exchanged.
    ``φ = 0, ψ ≠ 0`` yields a witness; ``φ = ψ = 0`` gives ``λ = 0``.
    """
    if phi.shape != psi.shape:
        raise DomainError(
            "Forms differ in dimensions", left=list(phi.shape), right=list(psi.shape)
        )
    lam = _ratio(phi, psi)
    if lam is not None:
        return Proportional(lam)

    m, n = phi.shape
    rng = substream(seed, "proportionality")
    log: list[dict[str, Any]] = []
    fixed = [VectorModel.unit(m)] + [_basis(m, i) for i in range(m)]
    randoms = (random_vector(rng, m) for _ in range(attempts))
    for x in itertools.chain(fixed, randoms):
        y = _separating(phi.left(x), psi.left(x))
        if y is not None:
            return _verified(phi, psi, x, Vector(tuple(y)))
        y_probe = random_vector(rng, n)
        x_alt = _separating(phi.right(y_probe), psi.right(y_probe))
        if x_alt is not None:
            return _verified(phi, psi, Vector(tuple(x_alt)), y_probe)
        log.append({"x": _vec(x), "y": _vec(y_probe)})
    logger.info("proportionality search inconclusive after %d attempts", len(log))
    return Inconclusive(tuple(log))


def proportionality_report(
    phi: BilinearForm, psi: BilinearForm, *, seed: int = 0
) -> LabReport:
    result = proportionality(phi, psi, seed=seed)
    match result:
        case Proportional(lam=lam):
            witness = {"lambda": format_rational(lam)}
        case KernelWitness(x=x, y=y, phi_value=p, psi_value=q):
            witness = {
                "x": _vec(x),
                "y": _vec(y),
                "phi": format_rational(p),
                "psi": format_rational(q),
            }
        case Inconclusive(attempts=attempts):
            witness = {"inconclusive": True, "attempts": list(attempts)}
    return LabReport(
        check="proportionality",
        dims=list(phi.shape),
        seed=seed,
        result=not isinstance(result, Inconclusive),
        witness=witness,
    )


# -------------------------------------------------------------- bimorphisms
def check_bimorphism(
    T: AtomBimorphism | BilinearMap, trials: int = 20, seed: int = 0
) -> LabReport:
    """Lattice and linearity laws of *T* on seeded random inputs.

    Checks ``T(|x|, |y|) = |T(x, y)|``, additivity in each argument and
    positive homogeneity in each argument.
    """
    m, n, k = T.dims
    rng = substream(seed, "bimorphism")
    add, scale, vabs = VectorModel.add, VectorModel.scale, VectorModel.abs
    witness = None
    for trial in range(trials):
        x, x2 = random_vector(rng, m), random_vector(rng, m)
        y, y2 = random_vector(rng, n), random_vector(rng, n)
        c = random_rational(rng, nonnegative=True)
        txy = T(x, y)
        laws = {
            "lattice": (T(vabs(x), vabs(y)), vabs(txy)),
            "additive_left": (T(add(x, x2), y), add(txy, T(x2, y))),
            "additive_right": (T(x, add(y, y2)), add(txy, T(x, y2))),
            "homogeneous_left": (T(scale(c, x), y), scale(c, txy)),
            "homogeneous_right": (T(x, scale(c, y)), scale(c, txy)),
        }
        for law, (left, right) in laws.items():
            if left != right:
                witness = {
                    "law": law,
                    "trial": trial,
                    "x": _vec(x),
                    "y": _vec(y),
                    "left": _vec(left),
                    "right": _vec(right),
                }
                break
        if witness:
            break
    return LabReport(
        check="bimorphism",
        dims=[m, n, k],
        seed=seed,
        trials=trials,
        result=witness is None,
        witness=witness,
    )


def _require_unit_preserving(T: AtomBimorphism) -> None:
    if not T.is_unit_preserving():
        e1, e2, _ = T.units()
        raise HypothesisFailure(
            "T does not map (e1, e2) to the unit",
            image=_vec(T(e1, e2)),
            dims=list(T.dims),
        )


def _multiplicative_on(
    T: AtomBimorphism, a: Vector, b: Vector, x: Vector, y: Vector
) -> dict[str, Any] | None:
    left = T(VectorModel.mul(a, x), VectorModel.mul(b, y))
    right = VectorModel.mul(T(a, b), T(x, y))
    if left == right:
        return None
    return {
        "a": _vec(a),
        "b": _vec(b),
        "x": _vec(x),
        "y": _vec(y),
        "left": _vec(left),
        "right": _vec(right),
    }


def check_multiplicative(
    T: AtomBimorphism, trials: int = 20, seed: int = 0
) -> LabReport:
    """``T(a∘x, b∘y) = T(a,b)∘T(x,y)`` on seeded samples.

    Raises HypothesisFailure unless ``T(e₁, e₂) = e_B``.
    """
    _require_unit_preserving(T)
    m, n, k = T.dims
    rng = substream(seed, "multiplicative")
    witness = None
    for _ in range(trials):
        a, x = random_vector(rng, m), random_vector(rng, m)
        b, y = random_vector(rng, n), random_vector(rng, n)
        witness = _multiplicative_on(T, a, b, x, y)
        if witness:
            break
    return LabReport(
        check="multiplicative",
        dims=[m, n, k],
        seed=seed,
        trials=trials,
        result=witness is None,
        witness=witness,
    )


def exhaustive_multiplicative(
    T: AtomBimorphism, values: tuple[Fraction, ...] = SMALL_LATTICE
) -> LabReport:
    """Multiplicativity on all basis quadruples and on a small value lattice.

    Both sides are linear in each of a, b, x, y separately, so agreement on
    basis vectors decides the identity for all inputs. The lattice pass
    enumerates every ``a ∈ values^m`` and ``b ∈ values^n`` against the
    units and the basis vectors.
    """
    _require_unit_preserving(T)
    m, n, k = T.dims
    e_m = [_basis(m, p) for p in range(m)]
    e_n = [_basis(n, q) for q in range(n)]
    e1, e2, _ = T.units()
    cases = itertools.chain(
        (
            (a, b, x, y)
            for a, x in itertools.product(e_m, repeat=2)
            for b, y in itertools.product(e_n, repeat=2)
        ),
        (
            (Vector(a), Vector(b), x, y)
            for a in itertools.product(values, repeat=m)
            for b in itertools.product(values, repeat=n)
            for x, y in [(e1, e2), *zip(e_m, itertools.cycle(e_n))]
        ),
    )
    witness = next(
        (w for case in cases if (w := _multiplicative_on(T, *case)) is not None), None
    )
    return LabReport(
        check="multiplicative_exhaustive",
        dims=[m, n, k],
        result=witness is None,
        witness=witness,
    )


# -------------------------------------------------------------- convergence
def convergence_bound_check(
    phi: AtomBimorphism | BilinearMap | BilinearForm,
    pair: ConvergencePair,
    n_max: int = 64,
) -> LabReport:
    """``|φ(fₙ,gₙ) − φ(f,g)| ≤ (1/n)(φ(u,w) + φ(|f|,v))`` for ``n = 1..n_max``.

    An exact inequality per n, componentwise; no limits are taken.
    """
    phi_map = BilinearMap((phi,)) if isinstance(phi, BilinearForm) else phi.to_map()
    if not phi_map.is_positive():
        raise DomainError("The convergence bound needs a positive bilinear map")
    m, n, k = phi_map.dims
    if (m, n) != (pair.f.dim, pair.g.dim):
        raise DomainError(
            "Pair dimensions do not match the map",
            map=[m, n],
            pair=[pair.f.dim, pair.g.dim],
        )
    base = phi_map(pair.f, pair.g)
    slack = VectorModel.add(
        phi_map(pair.u, pair.w), phi_map(VectorModel.abs(pair.f), pair.v)
    )
    witness = None
    for step in range(1, n_max + 1):
        fn, gn = pair.terms(step)
        gap = VectorModel.abs(VectorModel.sub(phi_map(fn, gn), base))
        bound = VectorModel.scale(Fraction(1, step), slack)
        if not VectorModel.leq(gap, bound):
            witness = {"n": step, "gap": _vec(gap), "bound": _vec(bound)}
            break
    return LabReport(
        check="convergence",
        dims=[m, n, k],
        trials=n_max,
        result=witness is None,
        witness=witness,
    )


# --------------------------------------------------------- scaling reduction
def _between_zero_and_unit(name: str, vec: Vector, unit: Vector) -> None:
    zero = VectorModel.zero(unit.dim)
    if vec.dim != unit.dim or not (
        VectorModel.leq(zero, vec) and VectorModel.leq(vec, unit)
    ):
        raise DomainError(
            f"{name} must lie between 0 and the unit", **{name: _vec(vec)}
        )


def azz_scaling_check(
    T: AtomBimorphism, a: Vector, b: Vector, *, seed: int = 0
) -> LabReport:
    """``S(x, y) = T(a∘x, b∘y)`` equals ``T(a, b)·T`` for scalar unit-preserving T.

    Requires ``k = 1``, ``T(e₁, e₂) = 1``, ``0 ≤ a ≤ e₁`` and ``0 ≤ b ≤ e₂``.
    The factor is recovered with :func:`proportionality` on the matrices.
    """
    if T.k != 1:
        raise HypothesisFailure(
            "The scaling check is for scalar-valued T", dims=list(T.dims)
        )
    _require_unit_preserving(T)
    e1, e2, _ = T.units()
    _between_zero_and_unit("a", a, e1)
    _between_zero_and_unit("b", b, e2)
    mul = VectorModel.mul
    psi = BilinearForm(
        tuple(
            tuple(
                T(mul(a, _basis(T.m, p)), mul(b, _basis(T.n, q)))[0]
                for q in range(T.n)
            )
            for p in range(T.m)
        )
    )
    expected = T(a, b)[0]
    result = proportionality(T.form(), psi, seed=seed)
    lam = result.lam if isinstance(result, Proportional) else None
    return LabReport(
        check="azz_scaling",
        dims=[T.m, T.n, 1],
        seed=seed,
        result=lam == expected,
        witness={
            "lambda": None if lam is None else format_rational(lam),
            "expected": format_rational(expected),
        },
    )


def functional_reduction_check(
    T: AtomBimorphism, a: Vector, b: Vector, *, seed: int = 0
) -> LabReport:
    """The scaling check for each ``πᵣ∘T``, a multiplicative functional."""
    _require_unit_preserving(T)
    failures = []
    for r in range(T.k):
        report = azz_scaling_check(T.coordinate(r), a, b, seed=seed)
        if not report:
            failures.append({"coordinate": r, **(report.witness or {})})
    return LabReport(
        check="functional_reduction",
        dims=list(T.dims),
        seed=seed,
        result=not failures,
        witness={"failures": failures} if failures else None,
    )
