"""
Tests for exact piecewise-polynomial functions.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszkit.exceptions import CarrierMismatchError, DomainError
from rieszkit.numeric import AlgebraicReal, Polynomial
from rieszkit.pwfun import (
    PiecewiseFunction,
    pw_abs,
    pw_add,
    pw_equal,
    pw_eval,
    pw_join,
    pw_leq,
    pw_leq_witness,
    pw_meet,
    pw_mul,
    pw_neg,
    pw_pos,
    pw_precompose,
    pw_scale,
    pw_sub,
    pw_truncate_converges,
    unit_function,
)
from rieszkit.sampling import random_monotone_pl, random_pl_function

UNIT = (Fraction(0), Fraction(1))
X = PiecewiseFunction.identity(UNIT)
HALF = PiecewiseFunction.constant(Fraction(1, 2), UNIT)


def poly(*coeffs):
    return Polynomial(coeffs)


def pl(seed):
    return random_pl_function(random.Random(seed), UNIT, max_breaks=3, max_num=8, max_den=4)


class TestArithmetic:
    """Ring operations merge breakpoints and stay canonical."""

    def test_square(self):
        assert pw_equal(pw_mul(X, X), PiecewiseFunction.polynomial(poly(0, 0, 1), UNIT))

    def test_sum_collapses_to_constant(self):
        one_minus_x = PiecewiseFunction.polynomial(poly(1, -1), UNIT)
        total = pw_add(X, one_minus_x)
        assert total.pieces == (Polynomial.constant(1),)
        assert len(total.breakpoints) == 2

    def test_product_keeps_the_kink(self):
        f = pw_mul(pw_abs(pw_sub(X, HALF)), X)
        assert f.pieces == (poly(0, Fraction(1, 2), -1), poly(0, Fraction(-1, 2), 1))
        assert f.breakpoints[1] == AlgebraicReal.from_rational(Fraction(1, 2))

    def test_domain_mismatch(self):
        other = PiecewiseFunction.identity((0, 2))
        with pytest.raises(CarrierMismatchError):
            pw_add(X, other)

    def test_scale_by_zero(self):
        assert pw_scale(0, X).is_zero()


class TestLattice:
    """Moduli, meets and joins with exact breakpoints."""

    def test_abs_of_shifted_identity(self):
        f = pw_abs(pw_sub(X, HALF))
        assert f.pieces == (poly(Fraction(1, 2), -1), poly(Fraction(-1, 2), 1))

    def test_abs_of_nonnegative_is_identity(self):
        square = pw_mul(X, X)
        assert pw_equal(pw_abs(square), square)

    def test_abs_with_irrational_breakpoint(self):
        f = PiecewiseFunction.polynomial(poly(-2, 0, 1), (0, 2))
        g = pw_abs(f)
        assert len(g.pieces) == 2
        root = g.breakpoints[1]
        assert not root.is_rational
        assert root == AlgebraicReal.from_isolation(poly(-2, 0, 1), 1, 2)
        assert g.pieces == (poly(2, 0, -1), poly(-2, 0, 1))

    def test_meet_of_crossing_lines(self):
        f = pw_meet(X, PiecewiseFunction.polynomial(poly(1, -1), UNIT))
        assert f.breakpoints[1].rational == Fraction(1, 2)
        assert f.pieces == (poly(0, 1), poly(1, -1))

    def test_pos_of_negative_constant(self):
        assert pw_pos(PiecewiseFunction.constant(-3, UNIT)).is_zero()

    def test_neg_part(self):
        f = pw_neg(pw_sub(X, HALF))
        assert pw_eval(f, Fraction(1, 4)) == Fraction(1, 4)
        assert pw_eval(f, Fraction(3, 4)) == 0

    def test_modulus_is_join(self):
        x = PiecewiseFunction.identity((-1, 1))
        assert pw_equal(pw_abs(x), pw_join(x, pw_scale(-1, x)))

    @pytest.mark.parametrize("seed", range(10))
    def test_join_idempotent(self, seed):
        f = pl(seed)
        assert pw_equal(pw_join(f, f), f)

    @pytest.mark.parametrize("seed", range(10))
    def test_f_algebra_law(self, seed):
        """``f ∧ g = 0`` and ``h ≥ 0`` give ``(h·f) ∧ g = 0``."""
        u, h = pl(seed), pw_abs(pl(seed + 100))
        f, g = pw_pos(u), pw_neg(u)
        assert pw_meet(f, g).is_zero()
        assert pw_meet(pw_mul(h, f), g).is_zero()


class TestQueries:
    """Evaluation, order and truncation."""

    def test_eval(self):
        assert pw_eval(pw_abs(pw_sub(X, HALF)), Fraction(1, 4)) == Fraction(1, 4)
        assert pw_eval(unit_function(UNIT), Fraction(2, 7)) == 1
        assert pw_eval(pw_mul(X, X), Fraction(2, 3)) == Fraction(4, 9)

    def test_eval_outside_domain(self):
        with pytest.raises(DomainError):
            pw_eval(X, 2)

    def test_square_bound_on_zero_three(self):
        x = PiecewiseFunction.identity((0, 3))
        square = pw_mul(x, x)
        assert pw_leq(square, pw_add(x, pw_mul(x, square)))

    def test_leq_witness(self):
        witness = pw_leq_witness(X, pw_mul(X, X))
        assert witness is not None and 0 < witness < 1
        assert witness > witness * witness
        assert not pw_leq(X, pw_mul(X, X))
        assert pw_leq_witness(pw_mul(X, X), X) is None

    def test_truncation(self):
        assert pw_truncate_converges(X, unit_function(UNIT)) == 1
        x3 = PiecewiseFunction.identity((0, 3))
        assert pw_truncate_converges(pw_mul(x3, x3), unit_function((0, 3))) == 9

    def test_truncation_of_zero(self):
        assert pw_truncate_converges(pw_scale(0, X), unit_function(UNIT)) == 0

    def test_truncation_needs_positive_input(self):
        with pytest.raises(DomainError):
            pw_truncate_converges(pw_sub(X, HALF), unit_function(UNIT))


class TestConstruction:
    """Validated construction rejects malformed pieces."""

    def test_discontinuous_pieces(self):
        with pytest.raises(DomainError):
            PiecewiseFunction.from_pieces(UNIT, [0, Fraction(1, 2), 1], [poly(0), poly(1)])

    def test_unsorted_breakpoints(self):
        with pytest.raises(DomainError):
            PiecewiseFunction.from_pieces(
                UNIT, [0, Fraction(3, 4), Fraction(1, 4), 1], [poly(0)] * 3
            )

    def test_empty_domain(self):
        with pytest.raises(DomainError):
            PiecewiseFunction.identity((1, 1))

    def test_equal_adjacent_pieces_merge(self):
        f = PiecewiseFunction.from_pieces(UNIT, [0, Fraction(1, 2), 1], [poly(0, 1)] * 2)
        assert len(f.pieces) == 1


class TestReparameterization:
    """Precomposition with increasing piecewise-linear maps."""

    @pytest.mark.parametrize("seed", range(5))
    def test_precompose_pointwise(self, seed):
        rng = random.Random(seed)
        phi = random_monotone_pl(rng, UNIT)
        f = pw_mul(pl(seed), pl(seed + 1))
        composed = pw_precompose(f, phi)
        for k in range(9):
            t = Fraction(k, 8)
            assert pw_eval(composed, t) == pw_eval(f, pw_eval(phi, t))

    def test_precompose_rejects_decreasing_maps(self):
        flip = PiecewiseFunction.polynomial(poly(1, -1), UNIT)
        with pytest.raises(DomainError):
            pw_precompose(X, flip)


class TestProperties:
    """Lattice identities on random piecewise-linear functions."""

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=10**6))
    def test_meet_plus_join_is_sum(self, a, b):
        f, g = pl(a), pl(b)
        assert pw_equal(pw_add(pw_meet(f, g), pw_join(f, g)), pw_add(f, g))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_positive_and_negative_parts(self, a):
        f = pl(a)
        assert pw_equal(pw_sub(pw_pos(f), pw_neg(f)), f)
        assert pw_equal(pw_add(pw_pos(f), pw_neg(f)), pw_abs(f))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_square_bound(self, a):
        """``0 ≤ a² ≤ a + a³`` for ``a = p²``."""
        p = pl(a)
        f = pw_mul(p, p)
        square = pw_mul(f, f)
        assert pw_leq(pw_scale(0, f), square)
        assert pw_leq(square, pw_add(f, pw_mul(f, square)))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_square_bound_identity(self, a):
        """``a + a³ − a² = a·((a − 1/2)² + 3/4)``."""
        f = pl(a)
        left = pw_sub(pw_add(f, pw_mul(f, pw_mul(f, f))), pw_mul(f, f))
        shifted = pw_sub(f, PiecewiseFunction.constant(Fraction(1, 2), UNIT))
        inner = pw_add(
            pw_mul(shifted, shifted), PiecewiseFunction.constant(Fraction(3, 4), UNIT)
        )
        assert pw_equal(left, pw_mul(f, inner))
