"""Product rewriting into ladder form, certificates and homomorphism transport."""

from .certificate import (
    Certificate,
    ModelCheck,
    check_certificate,
    dump_json,
    four_case_transport,
    make_certificate,
    transport_check,
)
from .homs import (
    CoordinateProjection,
    GridNodeEvaluation,
    PointEvaluation,
    Reparameterization,
    RieszHom,
)
from .rewriter import (
    ProductRewriter,
    default_fuel,
    fabsg_rewrite,
    pospos_rewrite,
    product_rewrite,
    simplify_scales,
)

__all__ = (
    "Certificate",
    "CoordinateProjection",
    "GridNodeEvaluation",
    "ModelCheck",
    "PointEvaluation",
    "ProductRewriter",
    "Reparameterization",
    "RieszHom",
    "check_certificate",
    "default_fuel",
    "dump_json",
    "fabsg_rewrite",
    "four_case_transport",
    "make_certificate",
    "pospos_rewrite",
    "product_rewrite",
    "simplify_scales",
    "transport_check",
)
