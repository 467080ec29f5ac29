from fractions import Fraction

import orjson
import pytest

from rieszkit.config import Budget, budget_scope
from rieszkit.expr import ModelBinding
from rieszkit.models import PwModel, Vector, VectorModel
from rieszkit.numeric import Polynomial
from rieszkit.pwfun import PiecewiseFunction, format_pw

UNIT = (Fraction(0), Fraction(1))


@pytest.fixture
def unit_interval():
    return UNIT


@pytest.fixture
def x_fun():
    """The identity function on [0, 1]."""
    return PiecewiseFunction.identity(UNIT)


@pytest.fixture
def hat_fun():
    """``min(2x, 2 - 2x)`` on [0, 1], a kink at 1/2."""
    return PiecewiseFunction.from_pieces(
        UNIT,
        [0, Fraction(1, 2), 1],
        [Polynomial.linear(2, 0), Polynomial.linear(-2, 2)],
    )


@pytest.fixture
def pw_binding(x_fun, hat_fun):
    return ModelBinding(PwModel, {"g1": x_fun, "g2": hat_fun}, UNIT)


@pytest.fixture
def vector_binding():
    return ModelBinding(
        VectorModel,
        {
            "g1": Vector.of([1, -2, Fraction(1, 3), 0]),
            "g2": Vector.of([-1, 4, Fraction(-5, 2), 7]),
        },
        4,
    )


@pytest.fixture
def small_budget():
    """A tight budget installed for the duration of one test."""
    with budget_scope(Budget(degree_cap=2)) as budget:
        yield budget


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document under tmp_path and return its path."""

    def _write(name, data):
        path = tmp_path / name
        path.write_bytes(orjson.dumps(data))
        return path

    return _write


@pytest.fixture
def pw_binding_file(write_json, x_fun):
    return write_json(
        "gens.json",
        {"model": "pwfun", "domain": ["0", "1"], "generators": {"g1": format_pw(x_fun)}},
    )
