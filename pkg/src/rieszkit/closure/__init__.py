"""Closure engine: certified span membership and the budgeted ladder."""

from .ladder import (
    LadderBasis,
    LadderReport,
    ladder_extend,
    ladder_report,
    ladder_saturation,
    subalgebra_not_riesz_witness,
)
from .linalg import nullspace, rank, row_echelon, solve
from .span import InSpan, NotInSpan, SpanBasis, span_membership

__all__ = (
    "InSpan",
    "LadderBasis",
    "LadderReport",
    "NotInSpan",
    "SpanBasis",
    "ladder_extend",
    "ladder_report",
    "ladder_saturation",
    "nullspace",
    "rank",
    "row_echelon",
    "solve",
    "span_membership",
    "subalgebra_not_riesz_witness",
)
