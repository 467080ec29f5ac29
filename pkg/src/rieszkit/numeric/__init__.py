"""Exact numeric core: rationals, polynomials, root isolation, algebraic reals."""

from .algebraic import (
    AlgebraicReal,
    alg_affine_preimage,
    alg_compare,
    alg_refine,
    alg_sign_at,
    rational_between,
)
from .polynomial import Polynomial, poly_eval, poly_gcd, poly_squarefree
from .rational import Ordering, Sign, as_rational, format_rational, parse_rational
from .sturm import count_roots, isolate_all_roots, isolate_roots, sturm_sequence

__all__ = (
    "AlgebraicReal",
    "Ordering",
    "Polynomial",
    "Sign",
    "alg_affine_preimage",
    "alg_compare",
    "alg_refine",
    "alg_sign_at",
    "as_rational",
    "count_roots",
    "format_rational",
    "isolate_all_roots",
    "isolate_roots",
    "parse_rational",
    "poly_eval",
    "poly_gcd",
    "poly_squarefree",
    "rational_between",
    "sturm_sequence",
)
