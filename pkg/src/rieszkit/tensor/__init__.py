"""Separable tensors over two piecewise models and the tensor closure lab."""

from .lab import (
    TensorBinding,
    WeakUnitReport,
    random_separable,
    riesz_tensor_check,
    weak_unit_probe,
)
from .separable import (
    SeparableTensor,
    tensor_add,
    tensor_eval,
    tensor_mul,
    tensor_scale,
    to_grid,
)

__all__ = (
    "SeparableTensor",
    "TensorBinding",
    "WeakUnitReport",
    "random_separable",
    "riesz_tensor_check",
    "tensor_add",
    "tensor_eval",
    "tensor_mul",
    "tensor_scale",
    "to_grid",
    "weak_unit_probe",
)
