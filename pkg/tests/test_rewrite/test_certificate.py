"""
Tests for product certificates, homomorphisms and transport.
"""

import random
from fractions import Fraction

import orjson
import pytest

from rieszkit.exceptions import (
    BindingError,
    BudgetError,
    CarrierMismatchError,
    CheckFailure,
    DomainError,
    HypothesisFailure,
    ParseError,
)
from rieszkit.expr import ModelBinding, Mul, Pos, desugar, parse_expr
from rieszkit.models import GridFunction, PwModel, Vector, VectorModel, equispaced
from rieszkit.pwfun import pw_eval
from rieszkit.rewrite import (
    Certificate,
    CoordinateProjection,
    GridNodeEvaluation,
    PointEvaluation,
    Reparameterization,
    check_certificate,
    four_case_transport,
    make_certificate,
    transport_check,
)
from rieszkit.rewrite import rewriter as rewriter_module
from rieszkit.sampling import random_ladder_expr, random_monotone_pl, random_pl_function


def broken_pospos(a, b):
    """``(ab)⁺``: right when a, b ≥ 0, wrong when both are negative."""
    return desugar(Pos(Mul(a, b)))


class NilpotentVectors(VectorModel):
    """Stand-in for a model that is not semiprime."""

    model_key = "nilpotent"
    semiprime = False


class TestMakeCertificate:
    """Certificates are checked before they are returned."""

    def test_product_of_moduli(self):
        cert = make_certificate("abs(g1)", "abs(g1)")
        assert cert.passed
        assert cert.rhs_text == "abs(g1*g1)"
        assert cert.b_generators == ["g1"]
        assert [m.kind for m in cert.models] == ["ladder_form", "vector"]

    def test_vector_and_piecewise_checks(self, pw_binding):
        cert = make_certificate("abs(g1 - g2)", "g1 + g2", [pw_binding], trials=20)
        assert cert.passed
        vector = next(m for m in cert.models if m.kind == "vector")
        assert vector.params == {"dim": 6, "trials": 20}
        pw = next(m for m in cert.models if m.kind == "pwfun")
        assert pw.params["rhs_pieces"] >= 1

    @pytest.mark.parametrize("seed", range(2))
    def test_deep_operands(self, seed, unit_interval):
        rng = random.Random(seed)
        names = ["g1", "g2", "g3"]
        f = random_ladder_expr(rng, names, depth=4)
        g = random_ladder_expr(rng, names, depth=4)
        gens = {
            n: random_pl_function(rng, unit_interval, max_breaks=2, max_num=3, max_den=2)
            for n in names
        }
        cert = make_certificate(f, g, [ModelBinding(PwModel, gens)], seed=seed, trials=5)
        assert cert.passed

    def test_deterministic_bytes(self, pw_binding):
        first = make_certificate("abs(g1 - 1/2)", "g2", [pw_binding], seed=7)
        second = make_certificate("abs(g1 - 1/2)", "g2", [pw_binding], seed=7)
        assert first.to_json() == second.to_json()

    def test_json_layout(self):
        data = orjson.loads(make_certificate("abs(g1)", "g2").to_json())
        assert {"b_generators", "lhs_text", "rhs_text", "seed", "trials", "models"} <= set(data)
        assert all(set(m) == {"kind", "params", "passed"} for m in data["models"])

    def test_simplified_rhs_still_verifies(self, vector_binding):
        cert = make_certificate("abs(g1 - g2)", "abs(g2)", [vector_binding], simplify=True)
        assert check_certificate(cert, [vector_binding]).passed

    def test_unbound_generator_in_binding(self, pw_binding):
        with pytest.raises(BindingError):
            make_certificate("abs(g3)", "g1", [pw_binding])

    def test_degree_cap_without_functions(self, small_budget):
        with pytest.raises(BudgetError) as exc_info:
            make_certificate("abs(g1)", "g2")
        error = exc_info.value
        assert error.exit_code == 5
        assert (error.budget, error.limit, error.actual) == ("degree_cap", 2, 3)

    def test_quadratic_rewrite_fits_cap(self, small_budget):
        assert make_certificate("abs(g1)", "abs(g1)").passed

    def test_refuses_non_semiprime_models(self):
        binding = ModelBinding(NilpotentVectors, {"g1": Vector.of([1, 2])})
        with pytest.raises(HypothesisFailure):
            make_certificate("abs(g1)", "g1", [binding])


class TestNegativeControl:
    """A wrong ``a⁺b⁺`` identity is caught by the checks."""

    def test_injected_rewrite(self):
        with pytest.raises(CheckFailure) as exc_info:
            make_certificate("g1", "abs(g2)", pospos=broken_pospos)
        error = exc_info.value
        assert error.exit_code == 4
        assert error.counterexample["model"] == "vector"
        assert error.certificate["counterexample"] == error.counterexample

    def test_patched_module(self, monkeypatch, pw_binding):
        monkeypatch.setattr(rewriter_module, "pospos_rewrite", broken_pospos)
        with pytest.raises(CheckFailure):
            make_certificate("abs(g1 - 1/2) - g2", "g1 - 1", [pw_binding])


class TestCheckCertificate:
    """Re-checking stored certificates."""

    def test_roundtrip_through_json(self, pw_binding):
        cert = make_certificate("abs(g1 - g2)", "g1", [pw_binding], seed=3)
        restored = Certificate.from_json(cert.to_json())
        assert check_certificate(restored, [pw_binding]).passed

    def test_tampered_rhs(self):
        cert = make_certificate("abs(g1)", "abs(g1)")
        tampered = cert.model_copy(update={"rhs_text": "abs(g1)"})
        with pytest.raises(CheckFailure) as exc_info:
            check_certificate(tampered)
        assert exc_info.value.certificate["rhs_text"] == "abs(g1)"

    def test_unstratified_rhs(self):
        cert = make_certificate("abs(g1)", "g2")
        tampered = cert.model_copy(update={"rhs_text": "abs(g1)*g2"})
        with pytest.raises(CheckFailure) as exc_info:
            check_certificate(tampered)
        assert exc_info.value.counterexample["model"] == "ladder_form"

    def test_lhs_must_be_a_product(self):
        cert = make_certificate("abs(g1)", "g2")
        tampered = cert.model_copy(update={"lhs_text": "g1 + g2"})
        with pytest.raises(ParseError):
            check_certificate(tampered)


class TestHomomorphisms:
    """Each bundled kind is a multiplicative lattice homomorphism."""

    def test_point_evaluation(self, pw_binding):
        h = PointEvaluation(Fraction(1, 3))
        f, g = pw_binding.generators["g1"], pw_binding.generators["g2"]
        assert h(PwModel.mul(f, g)) == VectorModel.mul(h(f), h(g))
        assert h(PwModel.abs(PwModel.sub(f, g))) == VectorModel.abs(VectorModel.sub(h(f), h(g)))
        assert h.describe() == {"kind": "point_evaluation", "point": "1/3"}

    def test_projection_range(self):
        with pytest.raises(DomainError):
            CoordinateProjection(5)(Vector.of([1, 2]))

    def test_grid_node(self):
        xs, ys = equispaced(Fraction(0), Fraction(1), 3), equispaced(Fraction(0), Fraction(1), 2)
        grid = GridFunction.tabulate(xs, ys, lambda x, y: x + y)
        assert GridNodeEvaluation(2, 1)(grid) == Vector.of([2])
        with pytest.raises(DomainError):
            GridNodeEvaluation(3, 0)(grid)

    def test_reparameterization(self, pw_binding, unit_interval):
        phi = random_monotone_pl(random.Random(4), unit_interval)
        h = Reparameterization(phi)
        f = pw_binding.generators["g2"]
        t = Fraction(2, 5)
        assert pw_eval(h(f), t) == pw_eval(f, pw_eval(phi, t))


class TestTransport:
    """Certificates survive multiplicative Riesz homomorphisms."""

    @pytest.fixture
    def pw_cert(self, pw_binding):
        return make_certificate("abs(g1 - g2)", "abs(g2 - 1/2) + g1", [pw_binding], seed=1)

    @pytest.mark.parametrize("point", [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1)])
    def test_point_evaluation(self, pw_cert, pw_binding, point):
        assert transport_check(pw_cert, PointEvaluation(point), pw_binding)

    @pytest.mark.parametrize("seed", range(3))
    def test_reparameterization(self, pw_cert, pw_binding, unit_interval, seed):
        phi = random_monotone_pl(random.Random(seed), unit_interval)
        assert transport_check(pw_cert, Reparameterization(phi), pw_binding)

    @pytest.mark.parametrize("index", range(4))
    def test_projection(self, vector_binding, index):
        cert = make_certificate("abs(g1) - g2", "abs(g1 + g2)", [vector_binding])
        assert transport_check(cert, CoordinateProjection(index), vector_binding)

    def test_wrong_source_model(self, pw_cert, vector_binding):
        with pytest.raises(CarrierMismatchError):
            transport_check(pw_cert, PointEvaluation(Fraction(1, 2)), vector_binding)

    def test_four_cases(self, pw_binding):
        results = four_case_transport(
            parse_expr("g1 - 1/2"), "g2 - 1/2", PointEvaluation(Fraction(1, 3)), pw_binding
        )
        assert results == {"++": True, "+-": True, "-+": True, "--": True}
