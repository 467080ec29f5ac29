"""Expression language: trees, parsing, desugaring, ladder levels, evaluation."""

from .ast import (
    Abs,
    Add,
    Expr,
    ExprTable,
    Gen,
    Join,
    Meet,
    Mul,
    NegPart,
    Pos,
    Scale,
    Unit,
    const,
    expr_degree,
    expr_size,
    generators_of,
    is_core,
    neg,
    sub,
)
from .desugar import desugar
from .evaluate import ModelBinding, eval_in_model
from .ladder import UNSTRATIFIED, is_ladder_form, ladder_level, unstratified_products
from .parser import parse_expr
from .printer import print_expr

__all__ = (
    "Abs",
    "Add",
    "Expr",
    "ExprTable",
    "Gen",
    "Join",
    "Meet",
    "ModelBinding",
    "Mul",
    "NegPart",
    "Pos",
    "Scale",
    "UNSTRATIFIED",
    "Unit",
    "const",
    "desugar",
    "eval_in_model",
    "expr_degree",
    "expr_size",
    "generators_of",
    "is_core",
    "is_ladder_form",
    "ladder_level",
    "neg",
    "parse_expr",
    "print_expr",
    "sub",
    "unstratified_products",
)
