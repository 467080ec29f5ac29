from .grid import GridFunction, GridModel, equispaced
from .pw import PwModel
from .vector import Vector, VectorModel

__all__ = (
    "GridFunction",
    "GridModel",
    "PwModel",
    "Vector",
    "VectorModel",
    "equispaced",
)
