"""
Tests for rewriting products into ladder form.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszkit.config import Budget, budget_scope
from rieszkit.exceptions import DomainError, FuelExhaustedError
from rieszkit.expr import (
    Abs,
    Add,
    Gen,
    ModelBinding,
    Mul,
    Scale,
    Unit,
    const,
    eval_in_model,
    expr_size,
    is_ladder_form,
    parse_expr,
)
from rieszkit.expr.ast import iter_nodes
from rieszkit.models import PwModel, Vector, VectorModel
from rieszkit.numeric import Polynomial
from rieszkit.pwfun import PiecewiseFunction, pw_abs, pw_equal, pw_mul
from rieszkit.rewrite import (
    ProductRewriter,
    default_fuel,
    fabsg_rewrite,
    pospos_rewrite,
    product_rewrite,
    simplify_scales,
)
from rieszkit.sampling import random_ladder_expr, random_pl_function, random_vector, substream

g1, g2 = Gen("g1"), Gen("g2")


def vectors(**values):
    return ModelBinding(VectorModel, {k: Vector.of(v) for k, v in values.items()})


def evaluate(text_or_expr, binding):
    e = parse_expr(text_or_expr) if isinstance(text_or_expr, str) else text_or_expr
    return eval_in_model(e, binding)


class TestPosPos:
    """``a⁺b⁺`` without products above level 1."""

    @pytest.mark.parametrize(
        "a, b, expected",
        [
            ([2], [2], 4),
            ([-1], [5], 0),
            ([0], [0], 0),
            ([-3], [-2], 0),
            ([Fraction(1, 2)], [Fraction(1, 3)], Fraction(1, 6)),
        ],
    )
    def test_scalar_instances(self, a, b, expected):
        binding = vectors(g1=a, g2=b)
        assert evaluate(pospos_rewrite(g1, g2), binding) == Vector.of([expected])

    def test_zero_operands(self):
        zero = const(0)
        binding = vectors(g1=[1])
        assert evaluate(pospos_rewrite(zero, zero), binding) == Vector.of([0])

    def test_only_level_one_products(self):
        assert is_ladder_form(pospos_rewrite(Mul(g1, g2), Add(g1, Unit())))

    def test_rejects_higher_operands(self):
        with pytest.raises(DomainError):
            pospos_rewrite(Abs(g1), g2)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_matches_product_of_positive_parts(self, seed):
        rng = substream(seed, "pospos")
        dim = rng.randint(1, 6)
        binding = ModelBinding(
            VectorModel, {"g1": random_vector(rng, dim), "g2": random_vector(rng, dim)}
        )
        a = random_ladder_expr(rng, ["g1", "g2"], depth=1)
        b = random_ladder_expr(rng, ["g1", "g2"], depth=1)
        expected = VectorModel.mul(
            VectorModel.pos(evaluate(a, binding)), VectorModel.pos(evaluate(b, binding))
        )
        assert evaluate(pospos_rewrite(a, b), binding) == expected

    @pytest.mark.parametrize("seed", range(4))
    def test_piecewise(self, seed, unit_interval):
        rng = random.Random(seed)
        f = random_pl_function(rng, unit_interval, max_breaks=2, max_num=5, max_den=3)
        g = random_pl_function(rng, unit_interval, max_breaks=2, max_num=5, max_den=3)
        binding = ModelBinding(PwModel, {"g1": f, "g2": g})
        expected = pw_mul(PwModel.pos(f), PwModel.pos(g))
        assert pw_equal(evaluate(pospos_rewrite(g1, g2), binding), expected)


class TestProductRewrite:
    """Rewriting ``f·g`` and ``f·|g|``."""

    def test_base_case(self):
        assert product_rewrite(g1, g2) == Mul(g1, g2)

    def test_product_of_moduli(self):
        assert product_rewrite(Abs(g1), Abs(g1)) == Abs(Mul(g1, g1))
        binding = vectors(g1=[1, -2])
        assert evaluate(Abs(Mul(g1, g1)), binding) == Vector.of([1, 4])

    def test_kink_times_generator(self):
        rhs = product_rewrite(parse_expr("abs(g1 - g2)"), g1)
        binding = vectors(g1=[1, -2], g2=[0, 3])
        assert is_ladder_form(rhs)
        assert evaluate(rhs, binding) == Vector.of([1, -10])

    def test_fabsg_base_case(self):
        rhs = fabsg_rewrite(g1, g1)
        assert evaluate(rhs, vectors(g1=[2, -3])) == Vector.of([4, -9])

    def test_fabsg_unit(self):
        assert fabsg_rewrite(Unit(), Add(g1, g2)) == Abs(Add(g1, g2))

    def test_fabsg_piecewise(self, unit_interval, x_fun):
        shifted = PiecewiseFunction.polynomial(Polynomial.linear(1, Fraction(-1, 2)), unit_interval)
        binding = ModelBinding(PwModel, {"g1": x_fun, "g2": shifted})
        rhs = fabsg_rewrite(g1, g2)
        assert pw_equal(evaluate(rhs, binding), pw_mul(x_fun, pw_abs(shifted)))

    def test_unit_factor(self):
        assert product_rewrite(Unit(), Abs(g1)) == Abs(g1)

    def test_sugar_is_desugared(self):
        rhs = product_rewrite(parse_expr("meet(g1, g2)"), parse_expr("pos(g1)"))
        binding = vectors(g1=[3, -1, 2], g2=[-2, 5, 2])
        assert is_ladder_form(rhs)
        expected = VectorModel.mul(
            evaluate("meet(g1, g2)", binding), evaluate("pos(g1)", binding)
        )
        assert evaluate(rhs, binding) == expected

    def test_rejects_unstratified_operand(self):
        with pytest.raises(DomainError):
            product_rewrite(Mul(Abs(g1), g2), g1)

    def test_shares_subterms(self):
        rhs = product_rewrite(parse_expr("abs(g1 - 1)"), parse_expr("abs(g2) + g1"))
        assert len(list(iter_nodes(rhs))) < expr_size(rhs)

    def test_simplify_scales(self):
        e = Scale(Fraction(2), Add(Scale(Fraction(3), Scale(Fraction(1, 3), g1)), Scale(1, g2)))
        assert simplify_scales(e) == Scale(Fraction(2), Add(g1, g2))

    def test_simplified_rhs_keeps_value(self, vector_binding):
        rhs = product_rewrite(parse_expr("abs(g1 - g2)"), parse_expr("g1 + g2"))
        assert evaluate(simplify_scales(rhs), vector_binding) == evaluate(rhs, vector_binding)


class TestFuel:
    """The fuel counter bounds recursion."""

    def test_default_fuel(self):
        f, g = Abs(g1), g2
        assert default_fuel(f, g) == 10 * (2 + 1) * 2

    def test_exhaustion(self):
        with pytest.raises(FuelExhaustedError) as exc_info:
            product_rewrite(Abs(g1), g2, fuel=1)
        error = exc_info.value
        assert error.budget == "fuel"
        assert error.limit == 1
        assert error.exit_code == 5
        assert "subterm" in error.details

    def test_budget_fuel(self):
        with budget_scope(Budget(fuel=1)):
            with pytest.raises(FuelExhaustedError):
                product_rewrite(Abs(g1), g2)

    def test_calls_are_cached(self):
        rewriter = ProductRewriter(1000)
        first = rewriter.product(Abs(g1), g2)
        calls = rewriter.calls
        assert rewriter.product(Abs(g1), g2) is first
        assert rewriter.calls == calls


class TestSoundness:
    """Rewritten products equal the semantic product."""

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_vectors(self, seed):
        rng = substream(seed, "soundness")
        names = ["g1", "g2", "g3"][: rng.randint(1, 3)]
        f = random_ladder_expr(rng, names, depth=rng.randint(1, 3))
        g = random_ladder_expr(rng, names, depth=rng.randint(1, 3))
        rhs = product_rewrite(f, g)
        assert is_ladder_form(rhs)
        dim = rng.randint(1, 5)
        binding = ModelBinding(VectorModel, {n: random_vector(rng, dim) for n in names}, dim)
        expected = VectorModel.mul(evaluate(f, binding), evaluate(g, binding))
        assert evaluate(rhs, binding) == expected

    @pytest.mark.parametrize("seed", range(3))
    def test_piecewise(self, seed, unit_interval):
        rng = substream(seed, "soundness", "pw")
        f = random_ladder_expr(rng, ["g1", "g2"], depth=2)
        g = random_ladder_expr(rng, ["g1", "g2"], depth=2)
        gens = {
            n: random_pl_function(rng, unit_interval, max_breaks=2, max_num=4, max_den=2)
            for n in ("g1", "g2")
        }
        binding = ModelBinding(PwModel, gens)
        expected = pw_mul(evaluate(f, binding), evaluate(g, binding))
        assert pw_equal(evaluate(product_rewrite(f, g), binding), expected)
