from fractions import Fraction

import pytest

from rieszkit.bindings import BindingFile, GridSpec, TensorBindingFile
from rieszkit.core import ModelRegistry
from rieszkit.exceptions import BindingError, ModelNotFoundError
from rieszkit.models import PwModel, Vector, VectorModel

X = "pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[0,1]]}"
ONE = "pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[1]]}"


class TestBindingFile:
    def test_vector_binding(self):
        spec = BindingFile(model="vector", generators={"g2": ["1/3", "0"], "g1": [1, -2]})
        binding = spec.to_binding()
        assert binding.model is VectorModel
        assert binding.element("g1") == Vector.of([1, -2])
        assert binding.carrier == 2
        assert binding.params == {"source": "file"}

    def test_scalar_shorthand(self):
        binding = BindingFile(model="vector", generators={"g1": "3/2"}).to_binding()
        assert binding.element("g1") == Vector.of([Fraction(3, 2)])

    def test_pw_binding(self, pw_binding_file, x_fun):
        from rieszkit.adapters import load_file

        binding = load_file(BindingFile, pw_binding_file).to_binding()
        assert binding.model is PwModel
        assert PwModel.equal(binding.element("g1"), x_fun)

    def test_bad_generator(self):
        spec = BindingFile(model="pwfun", generators={"g1": "pw{oops}"})
        with pytest.raises(BindingError) as exc_info:
            spec.to_binding()
        assert exc_info.value.generator == "g1"
        assert exc_info.value.__cause__ is not None

    def test_empty_binding_needs_a_carrier(self):
        with pytest.raises(BindingError):
            BindingFile(model="vector").to_binding()
        assert BindingFile(model="vector", dimension=3).to_binding().carrier == 3

    def test_registry_without_the_model(self):
        with pytest.raises(ModelNotFoundError) as exc_info:
            BindingFile(model="grid", generators={}).to_binding(ModelRegistry())
        assert exc_info.value.exit_code == 3

    def test_evaluation_point(self):
        assert BindingFile(point="-3/4").evaluation_point() == Fraction(-3, 4)
        assert BindingFile().evaluation_point() is None
        with pytest.raises(BindingError):
            BindingFile(point="half").evaluation_point()


class TestTensorBindingFile:
    def test_terms(self):
        spec = TensorBindingFile.model_validate(
            {
                "generators": {
                    "t1": {"x": X, "y": ONE},
                    "t2": [{"x": ONE, "y": X}, {"x": X, "y": X}],
                },
                "grid": {"nx": 4, "ny": 3},
            }
        )
        binding = spec.to_binding()
        assert len(binding.generators["t1"]) == 1
        assert len(binding.generators["t2"]) == 2
        assert spec.grid.shape == (4, 3)

    def test_default_grid(self):
        assert GridSpec().shape == (16, 16)

    def test_domain_mismatch(self):
        spec = TensorBindingFile.model_validate(
            {"generators": {"t1": {"x": X, "y": X}}, "grid": {"xdomain": ["0", "2"]}}
        )
        with pytest.raises(BindingError) as exc_info:
            spec.to_binding()
        assert exc_info.value.xdomain == ["0", "2"]
