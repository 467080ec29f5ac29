from fractions import Fraction

import pytest

from rieszkit.bimorph import AtomBimorphism, BilinearForm, BilinearMap, ConvergencePair
from rieszkit.exceptions import DomainError
from rieszkit.models import Vector


class TestBilinearForm:
    def test_evaluation(self):
        phi = BilinearForm.of([[1, 2], [0, Fraction(1, 2)]])
        # 1·3 + 2·(-4) + 2·(1/2)·(-4)
        assert phi(Vector.of([1, 2]), Vector.of([3, -4])) == -9

    def test_partial_functionals(self):
        phi = BilinearForm.of([[1, 2], [3, 4]])
        assert phi.left(Vector.of([1, 1])) == [4, 6]
        assert phi.right(Vector.of([1, 1])) == [3, 7]

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            BilinearForm.identity(2)(Vector.of([1]), Vector.of([1, 2]))

    @pytest.mark.parametrize("rows", [[], [[]], [[1, 2], [3]]])
    def test_malformed(self, rows):
        with pytest.raises(DomainError):
            BilinearForm.of(rows)

    def test_positivity(self):
        assert BilinearForm.of([[0, 1]]).is_positive()
        assert not BilinearForm.of([[0, -1]]).is_positive()


class TestAtomBimorphism:
    """``T(x, y)_r = c_r·x_{i_r}·y_{j_r}``."""

    def test_evaluation(self):
        T = AtomBimorphism.of(2, 3, [(0, 2), (1, 0, 3)])
        assert T(Vector.of([2, -1]), Vector.of([5, 7, 11])) == Vector.of([22, -15])

    def test_unit_preserving(self):
        assert AtomBimorphism.of(2, 2, [(0, 1), (1, 1)]).is_unit_preserving()
        assert not AtomBimorphism.of(2, 2, [(0, 1, 2)]).is_unit_preserving()

    @pytest.mark.parametrize(
        "m, n, atoms", [(0, 1, [(0, 0)]), (1, 1, []), (1, 1, [(1, 0)]), (1, 1, [(0, 0, -1)])]
    )
    def test_invalid(self, m, n, atoms):
        with pytest.raises(DomainError):
            AtomBimorphism.of(m, n, atoms)

    def test_matrix_forms(self):
        T = AtomBimorphism.of(2, 2, [(1, 0, 3)])
        assert T.form() == BilinearForm.of([[0, 0], [3, 0]])
        x, y = Vector.of([2, 5]), Vector.of([7, -1])
        assert T.to_map()(x, y) == T(x, y)

    def test_json(self):
        T = AtomBimorphism.of(1, 2, [(0, 1, Fraction(1, 2))])
        assert T.to_json() == {"m": 1, "n": 2, "atoms": [[0, 1, "1/2"]]}


class TestConvergencePair:
    def test_terms(self):
        one = Vector.of([1])
        pair = ConvergencePair(one, one, one, one)
        assert pair.terms(4) == (Vector.of([Fraction(5, 4)]), Vector.of([Fraction(5, 4)]))
        assert pair.w == Vector.of([2])

    def test_negative_regulator(self):
        one = Vector.of([1])
        with pytest.raises(DomainError):
            ConvergencePair(one, one, Vector.of([-1]), one)

    def test_dimensions_must_agree(self):
        with pytest.raises(DomainError):
            ConvergencePair(Vector.of([1]), Vector.of([1, 2]), Vector.of([1]), Vector.of([1]))

    def test_bilinear_map_dims(self):
        with pytest.raises(DomainError):
            BilinearMap((BilinearForm.identity(2), BilinearForm.identity(3)))
