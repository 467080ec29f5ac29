"""
rieszkit.suites - Seeded acceptance suites over every lab.

Each suite is a list of cases; each case draws its inputs from its own named
sub-stream of the run seed, so a failing case can be re-run alone. Results
are assembled in case order and carry no wall-clock data.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable, Iterator
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from .bimorph import (
    AtomBimorphism,
    BilinearForm,
    BilinearMap,
    ConvergencePair,
    KernelWitness,
    Proportional,
    check_bimorphism,
    check_multiplicative,
    convergence_bound_check,
    exhaustive_multiplicative,
    functional_reduction_check,
    proportionality,
)
from .config import RunConfig, budget_scope
from .exceptions import CheckFailure, ConfigurationError, RieszKitError
from .expr import Gen, ModelBinding, eval_in_model
from .models import GridModel, PwModel, Vector, VectorModel
from .numeric import format_rational
from .pwfun import format_pw, pw_mul
from .rewrite import (
    CoordinateProjection,
    GridNodeEvaluation,
    PointEvaluation,
    Reparameterization,
    four_case_transport,
    make_certificate,
    transport_check,
)
from .rewrite import rewriter as _rewriter
from .sampling import (
    random_ladder_expr,
    random_monotone_pl,
    random_pl_function,
    random_rational,
    random_vector,
    substream,
)
from .tensor import (
    TensorBinding,
    random_separable,
    riesz_tensor_check,
    tensor_mul,
    to_grid,
    weak_unit_probe,
)

__all__ = ("SUITES", "CaseResult", "SuiteSummary", "run_suite")

logger = logging.getLogger(__name__)

UNIT_INTERVAL = (Fraction(0), Fraction(1))

Failure = dict[str, Any] | None


class CaseResult(BaseModel):
    name: str
    total: int = 0
    passed: int = 0
    counterexample: dict[str, Any] | None = None

    @property
    def failed(self) -> int:
        return self.total - self.passed

    def record(self, index: int, failure: Failure) -> None:
        self.total += 1
        if failure is None:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = {"case": self.name, "index": index, **failure}


class SuiteSummary(BaseModel):
    suite: str
    seed: int
    trials: int
    cases: list[CaseResult] = Field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(case.total for case in self.cases)

    @property
    def passed(self) -> int:
        return sum(case.passed for case in self.cases)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def counterexample(self) -> dict[str, Any] | None:
        return next(
            (c.counterexample for c in self.cases if c.counterexample is not None), None
        )

    def to_report(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "cases": [
                {**case.model_dump(mode="json"), "failed": case.failed}
                for case in self.cases
            ],
            "counterexample": self.counterexample,
        }


def _guarded(check: Callable[[], Failure]) -> Failure:
    """Run one check; kernel errors become failures carrying the error record."""
    try:
        return check()
    except CheckFailure as exc:
        return {"error": exc.to_dict(), "counterexample": exc.details.get("counterexample")}
    except RieszKitError as exc:
        return {"error": exc.to_dict()}


def _draws(
    config: RunConfig, suite: str, case: str, count: int
) -> Iterator[tuple[int, random.Random]]:
    for index in range(count):
        yield index, substream(config.seed, "suite", suite, case, index)


def _vec(x: Vector) -> list[str]:
    return [format_rational(c) for c in x]


def _unit_fraction(rng: random.Random, den: int = 8) -> Fraction:
    return Fraction(rng.randint(0, den), den)


# ------------------------------------------------------------------------ l1
def _l1_square_vectors(config: RunConfig) -> CaseResult:
    """``0 ≤ a² ≤ a + a³`` for nonnegative vectors."""
    result = CaseResult(name="square_bound_vector")
    for index, rng in _draws(config, "l1", "square_vector", config.trials * 50):
        a = random_vector(rng, rng.randint(1, 8), 1000, 1000, nonnegative=True)

        def check(a=a) -> Failure:
            square = VectorModel.mul(a, a)
            cube = VectorModel.mul(a, square)
            if VectorModel.leq(VectorModel.zero(a.dim), square) and VectorModel.leq(
                square, VectorModel.add(a, cube)
            ):
                return None
            return {"a": _vec(a)}

        result.record(index, _guarded(check))
    return result


def _l1_square_pw(config: RunConfig) -> CaseResult:
    """The same bound for squares of random piecewise-linear functions."""
    result = CaseResult(name="square_bound_pwfun")
    for index, rng in _draws(config, "l1", "square_pwfun", config.trials * 5):
        p = random_pl_function(rng, UNIT_INTERVAL, max_breaks=5, max_num=16, max_den=8)

        def check(p=p) -> Failure:
            a = pw_mul(p, p)
            square = PwModel.mul(a, a)
            upper = PwModel.add(a, PwModel.mul(a, square))
            if PwModel.leq(PwModel.zero(a.domain), square) and PwModel.leq(square, upper):
                return None
            return {"a": format_pw(a)}

        result.record(index, _guarded(check))
    return result


def _pospos_failure(binding: ModelBinding) -> Failure:
    """None when the looked-up ``pospos_rewrite(a, b)`` equals ``a⁺b⁺`` in *binding*."""
    model = binding.model
    rewritten = _rewriter.pospos_rewrite(Gen("a"), Gen("b"))
    a, b = binding.element("a"), binding.element("b")
    expected = model.mul(model.pos(a), model.pos(b))
    actual = eval_in_model(rewritten, binding)
    if model.equal(actual, expected):
        return None
    return {
        "model": binding.kind,
        "assignment": {"a": model.to_json(a), "b": model.to_json(b)},
        "lhs": model.to_json(expected),
        "rhs": model.to_json(actual),
    }


def _l1_pospos_vectors(config: RunConfig) -> CaseResult:
    result = CaseResult(name="pospos_vector")
    for index, rng in _draws(config, "l1", "pospos_vector", config.trials * 50):
        dim = rng.randint(1, 8)
        generators = {
            "a": random_vector(rng, dim, 1000, 1000),
            "b": random_vector(rng, dim, 1000, 1000),
        }
        binding = ModelBinding(VectorModel, generators, dim)
        result.record(index, _guarded(lambda binding=binding: _pospos_failure(binding)))
    return result


def _l1_pospos_pw(config: RunConfig) -> CaseResult:
    result = CaseResult(name="pospos_pwfun")
    for index, rng in _draws(config, "l1", "pospos_pwfun", max(1, config.trials * 5 // 2)):
        generators = {
            name: random_pl_function(rng, UNIT_INTERVAL, max_breaks=3, max_num=8, max_den=4)
            for name in ("a", "b")
        }
        binding = ModelBinding(PwModel, generators, UNIT_INTERVAL)
        result.record(index, _guarded(lambda binding=binding: _pospos_failure(binding)))
    return result


def _l1_f_algebra(config: RunConfig) -> CaseResult:
    """``f ∧ g = 0, h ≥ 0 ⇒ (h·f) ∧ g = 0`` with ``f = u⁺``, ``g = u⁻``."""
    result = CaseResult(name="f_algebra_law")
    for index, rng in _draws(config, "l1", "f_algebra", config.trials):
        u = random_pl_function(rng, UNIT_INTERVAL, max_breaks=3, max_num=8, max_den=4)
        h = PwModel.abs(random_pl_function(rng, UNIT_INTERVAL, max_breaks=3, max_num=8, max_den=4))

        def check(u=u, h=h) -> Failure:
            f, g = PwModel.pos(u), PwModel.neg(u)
            meet = PwModel.meet(PwModel.mul(h, f), g)
            if PwModel.equal(meet, PwModel.zero(u.domain)):
                return None
            return {"u": format_pw(u), "h": format_pw(h)}

        result.record(index, _guarded(check))
    return result


# ------------------------------------------------------------------ rewriter
def _pw_generators(rng: random.Random, names: list[str]) -> dict[str, Any]:
    return {
        name: random_pl_function(rng, UNIT_INTERVAL, max_breaks=3, max_num=8, max_den=4)
        for name in names
    }


def _transport_homs(rng: random.Random, vector_dim: int) -> list[tuple[Any, str]]:
    homs: list[tuple[Any, str]] = [
        (PointEvaluation(_unit_fraction(rng, 16)), "pwfun") for _ in range(4)
    ]
    homs += [
        (Reparameterization(random_monotone_pl(rng, UNIT_INTERVAL)), "pwfun")
        for _ in range(2)
    ]
    homs += [(CoordinateProjection(i % vector_dim), "vector") for i in range(4)]
    return homs


def _rewriter_certificates(config: RunConfig) -> list[CaseResult]:
    """Certificates for random ladder pairs, then transport along homomorphisms."""
    certify = CaseResult(name="certificate")
    transport = CaseResult(name="transport")
    transported = 0
    for index, rng in _draws(config, "rewriter", "certificate", config.trials * 10):
        names = [f"g{i}" for i in range(1, rng.randint(1, 3) + 1)]
        f = random_ladder_expr(rng, names, depth=rng.randint(1, 4))
        g = random_ladder_expr(rng, names, depth=rng.randint(1, 4))
        pw_binding = ModelBinding(PwModel, _pw_generators(rng, names), UNIT_INTERVAL)
        vector_binding = ModelBinding(
            VectorModel,
            {name: random_vector(rng, config.vector_dim) for name in names},
            config.vector_dim,
        )
        case_seed = rng.randrange(2**32)
        outcome: dict[str, Any] = {}

        def check(f=f, g=g, binding=pw_binding, seed=case_seed, outcome=outcome) -> Failure:
            outcome["cert"] = make_certificate(
                f, g, [binding], seed=seed, trials=config.trials, vector_dim=config.vector_dim
            )
            return None

        certify.record(index, _guarded(check))
        cert = outcome.get("cert")
        if cert is None or transported >= config.trials * 5:
            continue
        transported += 1
        bindings = {"pwfun": pw_binding, "vector": vector_binding}
        for hom, kind in _transport_homs(rng, config.vector_dim):

            def moved(cert=cert, hom=hom, binding=bindings[kind]) -> Failure:
                if transport_check(cert, hom, binding):
                    return None
                return {"lhs": cert.lhs_text, "hom": hom.describe()}

            transport.record(index, _guarded(moved))

        def four_cases(cert=cert, binding=pw_binding, rng=rng) -> Failure:
            a, b = cert.operands()
            hom = PointEvaluation(_unit_fraction(rng, 16))
            cases = four_case_transport(a, b, hom, binding)
            if all(cases.values()):
                return None
            return {"lhs": cert.lhs_text, "hom": hom.describe(), "cases": cases}

        transport.record(index, _guarded(four_cases))
    return [certify, transport]


# -------------------------------------------------------------------- tensor
def _tensor_certificates(config: RunConfig) -> CaseResult:
    result = CaseResult(name="tensor_certificate")
    nx, ny = config.grid
    for index, rng in _draws(config, "tensor", "certificate", config.trials * 5):
        names = [f"t{i}" for i in range(1, rng.randint(1, 3) + 1)]
        binding = TensorBinding(
            UNIT_INTERVAL,
            UNIT_INTERVAL,
            {name: random_separable(rng, UNIT_INTERVAL, UNIT_INTERVAL) for name in names},
        )
        f = random_ladder_expr(rng, names, depth=rng.randint(1, 3))
        g = random_ladder_expr(rng, names, depth=rng.randint(1, 3))
        node = GridNodeEvaluation(rng.randrange(nx), rng.randrange(ny))
        case_seed = rng.randrange(2**32)

        def check(f=f, g=g, binding=binding, node=node, seed=case_seed, first=names[0]) -> Failure:
            cert = riesz_tensor_check(
                f, g, binding, config.grid, seed=seed, trials=config.trials, spot_checks=10
            )
            if not transport_check(cert, node, binding.grid_binding(config.grid)):
                return {"lhs": cert.lhs_text, "hom": node.describe()}
            probe = weak_unit_probe(Gen(first), binding, config.grid)
            if not probe.consistent:
                return {"weak_unit": probe.model_dump(mode="json")}
            return None

        result.record(index, _guarded(check))
    return result


def _tensor_products(config: RunConfig) -> CaseResult:
    """The grid of ``u·v`` is the nodewise product of the grids."""
    result = CaseResult(name="tensor_mul_rule")
    for index, rng in _draws(config, "tensor", "mul", config.trials * 5):
        u = random_separable(rng, UNIT_INTERVAL, UNIT_INTERVAL)
        v = random_separable(rng, UNIT_INTERVAL, UNIT_INTERVAL)
        binding = TensorBinding(UNIT_INTERVAL, UNIT_INTERVAL, {"u": u, "v": v})

        def check(u=u, v=v, binding=binding) -> Failure:
            xs, ys = binding.axes(config.grid)
            product = to_grid(tensor_mul(u, v), xs, ys)
            expected = GridModel.mul(to_grid(u, xs, ys), to_grid(v, xs, ys))
            if GridModel.equal(product, expected):
                return None
            return {"difference": GridModel.first_difference(product, expected)}

        result.record(index, _guarded(check))
    return result


# ------------------------------------------------------------------- bimorph
def _random_atoms(rng: random.Random, m: int, n: int, k: int, unit: bool) -> AtomBimorphism:
    atoms = [
        (rng.randrange(m), rng.randrange(n), 1 if unit else random_rational(rng, nonnegative=True))
        for _ in range(k)
    ]
    return AtomBimorphism.of(m, n, atoms)


def _random_form(rng: random.Random, m: int, n: int, *, nonnegative: bool = False) -> BilinearForm:
    return BilinearForm.of(
        [[random_rational(rng, nonnegative=nonnegative) for _ in range(n)] for _ in range(m)]
    )


def _bimorph_random(config: RunConfig) -> CaseResult:
    """Unit-preserving atom bimorphisms are multiplicative bimorphisms."""
    result = CaseResult(name="multiplicative_random")
    for index, rng in _draws(config, "bimorph", "random", config.trials * 25):
        T = _random_atoms(rng, rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6), True)
        case_seed = rng.randrange(2**32)

        def check(T=T, seed=case_seed) -> Failure:
            for report in (
                check_bimorphism(T, config.trials, seed),
                check_multiplicative(T, config.trials, seed),
            ):
                if not report:
                    return report.model_dump(mode="json")
            return None

        result.record(index, _guarded(check))
    return result


def _bimorph_exhaustive(config: RunConfig) -> CaseResult:
    result = CaseResult(name="multiplicative_exhaustive")
    for index, rng in _draws(config, "bimorph", "exhaustive", config.trials):
        T = _random_atoms(rng, rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3), True)

        def check(T=T) -> Failure:
            report = exhaustive_multiplicative(T)
            return None if report else report.model_dump(mode="json")

        result.record(index, _guarded(check))
    return result


def _bimorph_proportional(config: RunConfig) -> CaseResult:
    """``ψ = λφ`` recovers λ exactly."""
    result = CaseResult(name="proportional")
    for index, rng in _draws(config, "bimorph", "proportional", config.trials * 10):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        phi = _random_form(rng, m, n)
        while phi.is_zero():
            phi = _random_form(rng, m, n)
        lam = random_rational(rng)

        def check(phi=phi, lam=lam, seed=index) -> Failure:
            found = proportionality(phi, phi.scaled(lam), seed=seed)
            if isinstance(found, Proportional) and found.lam == lam:
                return None
            return {"phi": phi.to_json(), "lambda": format_rational(lam), "found": repr(found)}

        result.record(index, _guarded(check))
    return result


def _bimorph_witness(config: RunConfig) -> CaseResult:
    """``ψ = λφ + E_pq`` with ``φ₀₀ ≠ 0`` is never proportional to φ."""
    result = CaseResult(name="kernel_witness")
    for index, rng in _draws(config, "bimorph", "witness", config.trials * 10):
        m, n = rng.randint(1, 4), rng.randint(2, 4)
        rows = [[random_rational(rng) for _ in range(n)] for _ in range(m)]
        rows[0][0] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        phi = BilinearForm.of(rows)
        p, q = rng.randrange(m), rng.randrange(1, n)
        lam = random_rational(rng)
        psi_rows = [[lam * v for v in row] for row in phi.matrix]
        psi_rows[p][q] += 1
        psi = BilinearForm.of(psi_rows)

        def check(phi=phi, psi=psi, seed=index) -> Failure:
            found = proportionality(phi, psi, seed=seed)
            if (
                isinstance(found, KernelWitness)
                and phi(found.x, found.y) == 0
                and psi(found.x, found.y) != 0
            ):
                return None
            return {"phi": phi.to_json(), "psi": psi.to_json(), "found": repr(found)}

        result.record(index, _guarded(check))
    return result


def _bimorph_scaling(config: RunConfig) -> CaseResult:
    """Scalar scaling and its reduction through coordinate functionals."""
    result = CaseResult(name="scaling_reduction")
    for index, rng in _draws(config, "bimorph", "scaling", config.trials * 5):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        T = _random_atoms(rng, m, n, rng.randint(1, 3), True)
        a = Vector(tuple(_unit_fraction(rng) for _ in range(m)))
        b = Vector(tuple(_unit_fraction(rng) for _ in range(n)))

        def check(T=T, a=a, b=b, seed=index) -> Failure:
            report = functional_reduction_check(T, a, b, seed=seed)
            return None if report else report.model_dump(mode="json")

        result.record(index, _guarded(check))
    return result


# --------------------------------------------------------------- convergence
def _convergence(config: RunConfig) -> CaseResult:
    """The 1/n bound for random positive maps on ``ℚᵈ × ℚᵈ``."""
    result = CaseResult(name="convergence_bound")
    for index, rng in _draws(config, "convergence", "bound", config.trials * 5):
        d, k = rng.randint(1, 4), rng.randint(1, 3)
        if rng.random() < 0.5:
            phi: AtomBimorphism | BilinearMap = _random_atoms(rng, d, d, k, False)
        else:
            phi = BilinearMap(
                tuple(_random_form(rng, d, d, nonnegative=True) for _ in range(k))
            )
        pair = ConvergencePair(
            f=random_vector(rng, d),
            g=random_vector(rng, d),
            u=random_vector(rng, d, nonnegative=True),
            v=random_vector(rng, d, nonnegative=True),
        )

        def check(phi=phi, pair=pair) -> Failure:
            report = convergence_bound_check(phi, pair, n_max=64)
            return None if report else report.model_dump(mode="json")

        result.record(index, _guarded(check))
    return result


# -------------------------------------------------------------------- runner
def _prefixed(case: CaseResult, suite: str) -> CaseResult:
    name = f"{suite}.{case.name}"
    counterexample = case.counterexample and {**case.counterexample, "case": name}
    return case.model_copy(update={"name": name, "counterexample": counterexample})


SuiteFn = Callable[[RunConfig], list[CaseResult]]

SUITES: dict[str, SuiteFn] = {
    "l1": lambda c: [
        _l1_square_vectors(c),
        _l1_square_pw(c),
        _l1_pospos_vectors(c),
        _l1_pospos_pw(c),
        _l1_f_algebra(c),
    ],
    "rewriter": _rewriter_certificates,
    "tensor": lambda c: [_tensor_certificates(c), _tensor_products(c)],
    "bimorph": lambda c: [
        _bimorph_random(c),
        _bimorph_exhaustive(c),
        _bimorph_proportional(c),
        _bimorph_witness(c),
        _bimorph_scaling(c),
    ],
    "convergence": lambda c: [_convergence(c)],
}


def run_suite(name: str, config: RunConfig | None = None) -> SuiteSummary:
    """Run the named suite (or ``all``) under *config*'s seed and budget."""
    config = config or RunConfig()
    if name != "all" and name not in SUITES:
        raise ConfigurationError(
            f"Unknown suite {name!r}", suite=name, known=[*SUITES, "all"]
        )
    names = list(SUITES) if name == "all" else [name]
    summary = SuiteSummary(suite=name, seed=config.seed, trials=config.trials)
    with budget_scope(config.budget):
        for suite in names:
            started = time.perf_counter()
            cases = SUITES[suite](config)
            for case in cases:
                if name == "all":
                    case = _prefixed(case, suite)
                summary.cases.append(case)
            logger.info(
                "suite %s: %d/%d passed in %.2fs",
                suite,
                sum(c.passed for c in cases),
                sum(c.total for c in cases),
                time.perf_counter() - started,
            )
    return summary
