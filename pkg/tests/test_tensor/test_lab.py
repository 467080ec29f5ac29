from fractions import Fraction

import pytest

from rieszkit.exceptions import BindingError, CarrierMismatchError, CheckFailure
from rieszkit.expr import Mul, Pos, desugar
from rieszkit.pwfun import PiecewiseFunction, unit_function
from rieszkit.sampling import random_ladder_expr, substream
from rieszkit.tensor import (
    SeparableTensor,
    TensorBinding,
    random_separable,
    riesz_tensor_check,
    weak_unit_probe,
)

UNIT = (Fraction(0), Fraction(1))
X = PiecewiseFunction.identity(UNIT)
ONE = unit_function(UNIT)


@pytest.fixture
def coordinates():
    """``t1 = x⊗1`` and ``t2 = 1⊗y`` on the unit square."""
    return TensorBinding(
        UNIT,
        UNIT,
        {"t1": SeparableTensor.simple(X, ONE), "t2": SeparableTensor.simple(ONE, X)},
    )


class TestTensorCertificates:
    """Closure of the Riesz tensor product under multiplication."""

    def test_kink_times_coordinate(self, coordinates):
        cert = riesz_tensor_check("abs(t1 - t2)", "t1", coordinates, (8, 8), seed=2)
        assert cert.passed
        kinds = [m.kind for m in cert.models]
        assert kinds == ["ladder_form", "vector", "grid", "vector"]
        assert cert.models[2].params == {"nx": 8, "ny": 8}
        assert cert.models[3].params["off_grid"] is True
        assert len(cert.models[3].params["points"]) == 10
        assert "t1 (1 terms)" in cert.b_presentation

    def test_plain_product(self, coordinates):
        cert = riesz_tensor_check("t1", "t1", coordinates, (4, 4))
        assert cert.rhs_text == "t1*t1"

    @pytest.mark.parametrize("seed", range(2))
    def test_random_generators(self, seed):
        rng = substream(seed, "tensor-lab")
        names = ["t1", "t2", "t3"]
        binding = TensorBinding(UNIT, UNIT, {n: random_separable(rng, UNIT, UNIT) for n in names})
        f = random_ladder_expr(rng, names, depth=3)
        g = random_ladder_expr(rng, names, depth=3)
        cert = riesz_tensor_check(f, g, binding, (6, 6), seed=seed, trials=5, spot_checks=4)
        assert cert.passed

    def test_grid_only(self, coordinates):
        cert = riesz_tensor_check("abs(t1)", "t2", coordinates, (3, 3), spot_checks=0)
        assert [m.kind for m in cert.models] == ["ladder_form", "vector", "grid"]

    def test_broken_identity_is_caught(self, coordinates):
        with pytest.raises(CheckFailure):
            riesz_tensor_check(
                "t1 - 1/2",
                "abs(t2 - 1/2)",
                coordinates,
                (5, 5),
                pospos=lambda a, b: desugar(Pos(Mul(a, b))),
            )


class TestTensorBinding:
    def test_mixed_domains(self):
        other = SeparableTensor.simple(PiecewiseFunction.identity((0, 2)), ONE)
        with pytest.raises(CarrierMismatchError):
            TensorBinding(UNIT, UNIT, {"t1": other})

    def test_point_binding_needs_points(self, coordinates):
        with pytest.raises(BindingError):
            coordinates.point_binding([])

    def test_grid_binding_axes(self, coordinates):
        binding = coordinates.grid_binding((3, 2))
        xs, ys = binding.carrier
        assert xs == (0, Fraction(1, 2), 1)
        assert ys == (0, 1)


class TestWeakUnit:
    """``|u| ∧ (1⊗1)`` vanishes exactly where ``u`` does."""

    def test_zero(self, coordinates):
        report = weak_unit_probe("0", coordinates, (3, 3))
        assert report.consistent
        assert len(report.unit_meet_zeros) == 9

    def test_coordinate_column(self, coordinates):
        report = weak_unit_probe("t1", coordinates, (4, 3))
        assert report.consistent
        assert report.unit_meet_zeros == [[0, 0], [0, 1], [0, 2]]

    def test_unit(self, coordinates):
        report = weak_unit_probe("1", coordinates, (4, 4))
        assert report.consistent
        assert report.unit_meet_zeros == []

    def test_kink(self, coordinates):
        report = weak_unit_probe("abs(t1 - t2)", coordinates, (5, 5))
        assert report.consistent
        assert report.expression_zeros == [[i, i] for i in range(5)]
