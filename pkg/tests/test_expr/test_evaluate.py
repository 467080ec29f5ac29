"""
Tests for desugaring, ladder levels and evaluation in models.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszkit.exceptions import BindingError, CarrierMismatchError
from rieszkit.expr import (
    UNSTRATIFIED,
    Abs,
    Add,
    Gen,
    Meet,
    ModelBinding,
    Mul,
    Pos,
    Scale,
    Unit,
    desugar,
    eval_in_model,
    expr_degree,
    is_core,
    is_ladder_form,
    ladder_level,
    parse_expr,
    unstratified_products,
)
from rieszkit.models import PwModel, Vector, VectorModel
from rieszkit.pwfun import PiecewiseFunction, pw_equal, pw_eval, pw_mul
from rieszkit.sampling import random_ladder_expr, random_vector, substream

g1, g2 = Gen("g1"), Gen("g2")
MINUS_ONE, HALF = Fraction(-1), Fraction(1, 2)


class TestDesugar:
    """Lattice sugar rewrites into the core."""

    def test_positive_part(self):
        assert desugar(Pos(g1)) == Scale(HALF, Add(g1, Abs(g1)))

    def test_meet(self):
        expected = Scale(
            HALF, Add(Add(g1, g2), Scale(MINUS_ONE, Abs(Add(g1, Scale(MINUS_ONE, g2)))))
        )
        assert desugar(Meet(g1, g2)) == expected

    def test_core_input_is_returned_unchanged(self):
        e = parse_expr("abs(g1 - 2*g2)*g1 + 1")
        assert desugar(e) is e

    def test_no_sugar_remains(self):
        assert is_core(desugar(parse_expr("join(pos(g1), meet(negp(g2), 1))")))

    @settings(max_examples=500, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=1, max_value=6))
    def test_value_preserved_in_vectors(self, seed, dim):
        rng = substream(seed, "desugar")
        e = random_ladder_expr(rng, ["g1", "g2"], depth=rng.randint(1, 4))
        binding = ModelBinding(
            VectorModel, {"g1": random_vector(rng, dim), "g2": random_vector(rng, dim)}, dim
        )
        assert eval_in_model(desugar(e), binding) == eval_in_model(e, binding)


class TestLadderLevel:
    """Structural ladder levels."""

    @pytest.mark.parametrize(
        "text, level",
        [
            ("g1", 1),
            ("3*g1 + g2*g2 + 1", 1),
            ("abs(abs(g1) + g2)", 3),
            ("abs(g1)*g2", UNSTRATIFIED),
            ("pos(g1)", 2),
            ("meet(abs(g1), g2)", 3),
            ("abs(g1*g2 - 1) + g1", 2),
        ],
    )
    def test_levels(self, text, level):
        assert ladder_level(parse_expr(text)) == level

    def test_sugar_matches_desugared_level(self):
        for text in ("pos(g1)", "meet(abs(g1), g2)", "join(g1, negp(g2))"):
            e = parse_expr(text)
            assert ladder_level(e) == ladder_level(desugar(e))

    @pytest.mark.parametrize("seed", range(20))
    def test_abs_adds_one(self, seed):
        e = random_ladder_expr(random.Random(seed), ["g1", "g2"], depth=4)
        assert ladder_level(Abs(e)) == ladder_level(e) + 1

    def test_unstratified_products(self):
        e = parse_expr("abs(g1)*g2 + g1*g2")
        assert not is_ladder_form(e)
        assert unstratified_products(e) == [Mul(Abs(g1), g2)]


class TestDegree:
    """Total degree in the generators."""

    @pytest.mark.parametrize(
        "text, degree",
        [
            ("1", 0),
            ("g1", 1),
            ("g1 * 3", 1),
            ("g1*g2*g1", 3),
            ("abs(g1*g2) + g1", 2),
            ("meet(g1*g1, g2)", 2),
            ("abs(g1) * abs(g2*g2)", 3),
        ],
    )
    def test_degrees(self, text, degree):
        assert expr_degree(parse_expr(text)) == degree


class TestEvaluate:
    """Homomorphic evaluation."""

    def test_abs_in_vectors(self):
        binding = ModelBinding(VectorModel, {"g1": Vector.of([1, -2])})
        assert eval_in_model(Abs(g1), binding) == Vector.of([1, 2])

    def test_meet_with_unit(self):
        binding = ModelBinding(VectorModel, {"g1": Vector.of([3, HALF])})
        assert eval_in_model(Meet(g1, Unit()), binding) == Vector.of([1, HALF])

    def test_square_in_functions(self, x_fun):
        binding = ModelBinding(PwModel, {"g1": x_fun})
        assert pw_equal(eval_in_model(Mul(g1, g1), binding), pw_mul(x_fun, x_fun))

    def test_pointwise(self, pw_binding):
        f = eval_in_model(parse_expr("abs(g1 - 1/2)"), pw_binding)
        assert pw_eval(f, Fraction(1, 4)) == Fraction(1, 4)
        assert pw_eval(eval_in_model(parse_expr("1"), pw_binding), Fraction(1, 3)) == 1

    def test_distributes_over_coordinates(self, vector_binding):
        e = parse_expr("meet(g1*g2, abs(g1) + 1/2)")
        whole = eval_in_model(e, vector_binding)
        for i in range(4):
            coordinate = ModelBinding(
                VectorModel,
                {name: Vector.of([v[i]]) for name, v in vector_binding.generators.items()},
            )
            assert eval_in_model(e, coordinate) == Vector.of([whole[i]])

    def test_unbound_generator(self, pw_binding):
        with pytest.raises(BindingError) as exc_info:
            eval_in_model(parse_expr("g3 + g1"), pw_binding)
        assert exc_info.value.generator == "g3"
        assert exc_info.value.exit_code == 3

    def test_check_covers_lists_missing(self, pw_binding):
        with pytest.raises(BindingError) as exc_info:
            pw_binding.check_covers(parse_expr("g3 + g4*g1"))
        assert exc_info.value.missing == ["g3", "g4"]

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatchError):
            ModelBinding(VectorModel, {"g1": Vector.of([1]), "g2": Vector.of([1, 2])})

    def test_mixed_domains(self, x_fun):
        other = PiecewiseFunction.identity((0, 2))
        with pytest.raises(CarrierMismatchError):
            ModelBinding(PwModel, {"g1": x_fun, "g2": other})

    def test_empty_binding_needs_carrier(self):
        with pytest.raises(BindingError):
            ModelBinding(VectorModel, {})
        assert eval_in_model(Unit(), ModelBinding(VectorModel, {}, 2)) == Vector.of([1, 1])
