"""
Tests for Sturm root isolation and exact algebraic reals.
"""

import random
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszkit.exceptions import DomainError, ParseError
from rieszkit.numeric import (
    AlgebraicReal,
    Ordering,
    Polynomial,
    Sign,
    alg_affine_preimage,
    alg_compare,
    alg_refine,
    alg_sign_at,
    count_roots,
    isolate_all_roots,
    isolate_roots,
    rational_between,
    sturm_sequence,
)
from rieszkit.numeric.sturm import sign_variations

SQRT2 = AlgebraicReal.from_isolation(Polynomial([-2, 0, 1]), 1, 2)
SQRT3 = AlgebraicReal.from_isolation(Polynomial([-3, 0, 1]), 1, 2)


class TestSturm:
    """Root counting against known factorizations."""

    def test_count_distinct_roots(self):
        p = Polynomial.from_roots([-1, 0, 0, Fraction(1, 2), 3])
        assert count_roots(p, -10, 10) == 4
        assert count_roots(p, 0, 1) == 1  # (0, 1] excludes 0
        assert count_roots(p, -1, 0) == 1

    def test_empty_interval_counts_nothing(self):
        assert count_roots(Polynomial.x(), 1, 1) == 0

    def test_sign_variations_drop_by_root_count(self):
        p = Polynomial([-2, 0, 1])
        seq = sturm_sequence(p)
        assert sign_variations(seq, -2) - sign_variations(seq, 2) == 2

    def test_zero_polynomial_has_no_chain(self):
        with pytest.raises(DomainError):
            sturm_sequence(Polynomial())

    def test_isolation_is_ascending_and_disjoint(self):
        p = Polynomial.from_roots([3, -2, Fraction(1, 3)]) * Polynomial([-2, 0, 1])
        roots = isolate_all_roots(p)
        assert len(roots) == 5
        for left, right in zip(roots, roots[1:]):
            assert alg_compare(left, right) is Ordering.LESS
        assert [r.rational for r in roots if r.is_rational] == [-2, Fraction(1, 3), 3]

    def test_isolate_on_subinterval(self):
        roots = isolate_roots(Polynomial([-2, 0, 1]), 0, 2)
        assert len(roots) == 1
        assert roots[0] == SQRT2

    def test_isolate_rejects_empty_interval(self):
        with pytest.raises(DomainError):
            isolate_roots(Polynomial.x(), 1, 0)

    def test_random_degree_twelve_polynomials_are_fast(self):
        """100 polynomials with |coeff| <= 10^6 average under 100 ms each."""
        rng = random.Random(12)
        started = time.perf_counter()
        for _ in range(100):
            coeffs = [rng.randint(-(10**6), 10**6) for _ in range(13)]
            coeffs[-1] = coeffs[-1] or 1
            roots = isolate_all_roots(Polynomial(coeffs))
            assert len(roots) <= 12
            p = Polynomial(coeffs)
            irrational = [r for r in roots if not r.is_rational]
            assert all(count_roots(p, r.lo, r.hi) == 1 for r in irrational)
        assert time.perf_counter() - started < 10


class TestAlgebraicReal:
    """Exact comparison, sign and refinement."""

    def test_rational_fast_path(self):
        root = AlgebraicReal.from_isolation(Polynomial([-1, 2]), 0, 1)
        assert root.is_rational
        assert root.rational == Fraction(1, 2)

    def test_rational_root_of_higher_degree_is_detected(self):
        p = Polynomial([-2, 0, 1]) * Polynomial([-2, 3])
        (root,) = isolate_roots(p, Fraction(1, 2), 1)
        assert root.is_rational and root.rational == Fraction(2, 3)

    def test_irrational_comparisons(self):
        assert SQRT2 < SQRT3
        assert alg_compare(SQRT3, SQRT2) is Ordering.GREATER
        assert SQRT2 == AlgebraicReal.from_isolation(Polynomial([-4, 0, 2]), 0, 3)
        assert alg_compare(SQRT2, AlgebraicReal.from_rational(Fraction(141, 100))) is (
            Ordering.GREATER
        )

    def test_equal_values_from_different_polynomials(self):
        other = AlgebraicReal.from_isolation(
            Polynomial([-2, 0, 1]) * Polynomial([-5, 0, 1]), 1, 2
        )
        assert alg_compare(SQRT2, other) is Ordering.EQUAL

    def test_sign_at(self):
        assert alg_sign_at(Polynomial([-2, 0, 1]), SQRT2) is Sign.ZERO
        assert alg_sign_at(Polynomial([-3, 2]), SQRT2) is Sign.NEGATIVE  # 2√2 < 3
        assert alg_sign_at(Polynomial([0, 1]), SQRT2) is Sign.POSITIVE

    def test_refine(self):
        narrow = alg_refine(SQRT2, Fraction(1, 1000))
        assert narrow.width <= Fraction(1, 1000)
        assert narrow == SQRT2
        assert narrow.lo < Fraction(14143, 10000) and narrow.hi > Fraction(1414, 1000)

    def test_refine_rational_is_unchanged(self):
        half = AlgebraicReal.from_rational(Fraction(1, 2))
        assert alg_refine(half, Fraction(1, 10)) is half
        assert half.width == 0

    def test_refine_needs_positive_width(self):
        with pytest.raises(DomainError):
            alg_refine(SQRT2, 0)

    def test_rational_between(self):
        q = rational_between(SQRT2, SQRT3)
        assert SQRT2 < AlgebraicReal.from_rational(q) < SQRT3
        with pytest.raises(DomainError):
            rational_between(SQRT3, SQRT2)

    def test_affine_preimage(self):
        t = alg_affine_preimage(SQRT2, 2, 1)  # 2t + 1 = √2
        assert alg_sign_at(Polynomial([-1, 4, 4]), t) is Sign.ZERO  # (2t+1)² = 2
        assert alg_affine_preimage(AlgebraicReal.from_rational(3), 2, 1).rational == 1
        with pytest.raises(DomainError):
            alg_affine_preimage(SQRT2, -1, 0)

    def test_text_form(self):
        assert AlgebraicReal.parse(SQRT2.to_text()) == SQRT2
        assert AlgebraicReal.parse("3/4").rational == Fraction(3, 4)
        with pytest.raises(ParseError):
            AlgebraicReal.parse("alg{poly=[-2, 0, 1], lo=-2, hi=2}")

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=2, max_value=50), st.integers(min_value=2, max_value=50))
    def test_square_roots_order_like_integers(self, a, b):
        ra = isolate_roots(Polynomial([-a, 0, 1]), 0, 50)[0]
        rb = isolate_roots(Polynomial([-b, 0, 1]), 0, 50)[0]
        expected = (a > b) - (a < b)
        assert alg_compare(ra, rb).value == expected
