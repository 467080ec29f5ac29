"""
rieszkit.rewrite.certificate - Checked product certificates and their transport.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from typing import Any

import orjson
from pydantic import BaseModel, ConfigDict, Field

from ..config import active_budget
from ..exceptions import BudgetError, CheckFailure, HypothesisFailure, ParseError
from ..expr import (
    Expr,
    ModelBinding,
    Mul,
    NegPart,
    Pos,
    eval_in_model,
    expr_degree,
    generators_of,
    parse_expr,
    print_expr,
    unstratified_products,
)
from ..models import VectorModel
from ..sampling import random_vector, substream
from .homs import RieszHom
from .rewriter import product_rewrite, simplify_scales

__all__ = (
    "Certificate",
    "ModelCheck",
    "make_certificate",
    "check_certificate",
    "transport_check",
    "four_case_transport",
    "dump_json",
)

logger = logging.getLogger(__name__)


def dump_json(data: Any) -> bytes:
    """Canonical bytes: sorted keys, two-space indent, trailing newline."""
    option = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_APPEND_NEWLINE
    return orjson.dumps(data, option=option)


class ModelCheck(BaseModel):
    kind: str
    params: dict[str, Any] = Field(default_factory=dict)
    passed: bool


class Certificate(BaseModel):
    """``lhs = rhs`` where ``lhs`` is the product ``f*g`` and ``rhs`` is in ladder form."""

    model_config = ConfigDict(frozen=True)

    b_generators: list[str]
    b_presentation: str | None = None
    lhs_text: str
    rhs_text: str
    seed: int
    trials: int
    models: list[ModelCheck]
    counterexample: dict[str, Any] | None = None
    semiprime: bool = True

    @property
    def passed(self) -> bool:
        return self.counterexample is None and all(m.passed for m in self.models)

    def operands(self) -> tuple[Expr, Expr]:
        lhs = parse_expr(self.lhs_text)
        if not isinstance(lhs, Mul):
            raise ParseError("Certificate lhs is not a product", source=self.lhs_text)
        return lhs.left, lhs.right

    def rhs(self) -> Expr:
        return parse_expr(self.rhs_text)

    def to_json(self) -> bytes:
        return dump_json(self.model_dump(mode="json"))

    @classmethod
    def from_json(cls, data: bytes | str) -> Certificate:
        return cls.model_validate(orjson.loads(data))


def _coerce(e: Expr | str) -> Expr:
    return parse_expr(e) if isinstance(e, str) else e


def _compare(f: Expr, g: Expr, rhs: Expr, binding: ModelBinding) -> dict[str, Any] | None:
    """None when ``f·g = rhs`` in *binding*, else a counterexample record."""
    model = binding.model
    lhs_value = model.mul(eval_in_model(f, binding), eval_in_model(g, binding))
    rhs_value = eval_in_model(rhs, binding)
    if model.equal(lhs_value, rhs_value):
        return None
    return {
        "model": binding.kind,
        "assignment": {name: model.to_json(x) for name, x in sorted(binding.generators.items())},
        "lhs": model.to_json(lhs_value),
        "rhs": model.to_json(rhs_value),
    }


def _check_degree(rhs: Expr) -> None:
    """The rewritten term stays within the degree cap in every model."""
    cap = active_budget().degree_cap
    degree = expr_degree(rhs)
    if degree > cap:
        raise BudgetError(
            "Rewritten product exceeds the degree cap",
            budget="degree_cap",
            limit=cap,
            actual=degree,
            rhs=print_expr(rhs)[:500],
        )


def _run_checks(
    f: Expr,
    g: Expr,
    rhs: Expr,
    generators: Sequence[str],
    *,
    seed: int,
    trials: int,
    vector_dim: int,
    bindings: Sequence[ModelBinding],
) -> tuple[list[ModelCheck], dict[str, Any] | None]:
    checks: list[ModelCheck] = []
    bad = unstratified_products(rhs)
    checks.append(ModelCheck(kind="ladder_form", params={"unstratified": len(bad)}, passed=not bad))
    if bad:
        return checks, {"model": "ladder_form", "product": print_expr(bad[0])[:500]}

    rng = substream(seed, "certify", "vector")
    failure = None
    for trial in range(trials):
        assignment = {name: random_vector(rng, vector_dim) for name in generators}
        failure = _compare(f, g, rhs, ModelBinding(VectorModel, assignment, vector_dim))
        if failure is not None:
            failure["trial"] = trial
            break
    checks.append(
        ModelCheck(
            kind="vector",
            params={"dim": vector_dim, "trials": trials},
            passed=failure is None,
        )
    )
    if failure is not None:
        return checks, failure

    for binding in bindings:
        binding.check_covers(Mul(f, g))
        failure = _compare(f, g, rhs, binding)
        params = dict(binding.params)
        if binding.kind == "pwfun":
            value = eval_in_model(rhs, binding)
            params.setdefault("rhs_pieces", len(value.pieces))
        checks.append(ModelCheck(kind=binding.kind, params=params, passed=failure is None))
        if failure is not None:
            return checks, failure
    return checks, None


def make_certificate(
    f: Expr | str,
    g: Expr | str,
    bindings: Sequence[ModelBinding] = (),
    *,
    seed: int = 0,
    trials: int = 20,
    vector_dim: int = 6,
    b_presentation: str | None = None,
    simplify: bool = False,
    pospos: Callable[[Expr, Expr], Expr] | None = None,
) -> Certificate:
    """Rewrite ``f·g`` into ladder form and check the identity exactly.

    The vector model is always checked with *trials* seeded assignments;
    every binding in *bindings* (piecewise or grid) is checked once.
    Raises CheckFailure, carrying the failing certificate, on any mismatch,
    and BudgetError when the rewritten term is above the active degree cap.
    """
    f, g = _coerce(f), _coerce(g)
    for binding in bindings:
        if not binding.model.semiprime:
            raise HypothesisFailure(
                "Product rewriting is only valid in semiprime f-algebras",
                model=binding.kind,
            )

    rhs = product_rewrite(f, g, pospos=pospos)
    if simplify:
        rhs = simplify_scales(rhs)
    _check_degree(rhs)
    generators = sorted(generators_of(f) | generators_of(g))
    checks, counterexample = _run_checks(
        f, g, rhs, generators, seed=seed, trials=trials, vector_dim=vector_dim, bindings=bindings
    )
    cert = Certificate(
        b_generators=generators,
        b_presentation=b_presentation,
        lhs_text=print_expr(Mul(f, g)),
        rhs_text=print_expr(rhs),
        seed=seed,
        trials=trials,
        models=checks,
        counterexample=counterexample,
    )
    logger.debug("certificate for %s: %s", cert.lhs_text, "pass" if cert.passed else "FAIL")
    if not cert.passed:
        raise CheckFailure(
            "Certificate check failed",
            counterexample=counterexample,
            certificate=cert.model_dump(mode="json"),
        )
    return cert


def check_certificate(cert: Certificate, bindings: Sequence[ModelBinding] = ()) -> Certificate:
    """Re-run a certificate's checks from its texts; returns the fresh record."""
    f, g = cert.operands()
    rhs = cert.rhs()
    _check_degree(rhs)
    vector_dim = next((m.params.get("dim", 6) for m in cert.models if m.kind == "vector"), 6)
    checks, counterexample = _run_checks(
        f,
        g,
        rhs,
        cert.b_generators,
        seed=cert.seed,
        trials=cert.trials,
        vector_dim=vector_dim,
        bindings=bindings,
    )
    fresh = cert.model_copy(update={"models": checks, "counterexample": counterexample})
    if not fresh.passed:
        raise CheckFailure(
            "Certificate does not verify",
            counterexample=counterexample,
            certificate=fresh.model_dump(mode="json"),
        )
    return fresh


def transport_check(cert: Certificate, h: RieszHom, binding: ModelBinding) -> bool:
    """``h(rhs) = h(f)·h(g)`` exactly in h's target model."""
    h.check_source(binding.model)
    f, g = cert.operands()
    rhs = cert.rhs()
    target = h.target
    image_rhs = h(eval_in_model(rhs, binding))
    image_product = target.mul(h(eval_in_model(f, binding)), h(eval_in_model(g, binding)))
    return target.equal(image_rhs, image_product)


def four_case_transport(
    a: Expr | str, b: Expr | str, h: RieszHom, binding: ModelBinding
) -> dict[str, bool]:
    """``h(a^σ b^τ) = h(a)^σ h(b)^τ`` for the four sign choices σ, τ ∈ {+, −}.

    This is the symmetric four-case decomposition behind multiplicativity on
    the generated Riesz subspace; each case is reported separately.
    """
    a, b = _coerce(a), _coerce(b)
    h.check_source(binding.model)
    target = h.target
    ha, hb = h(eval_in_model(a, binding)), h(eval_in_model(b, binding))
    parts = {"+": (Pos, target.pos), "-": (NegPart, target.neg)}
    results: dict[str, bool] = {}
    for sa, (node_a, part_a) in parts.items():
        for sb, (node_b, part_b) in parts.items():
            image = h(eval_in_model(Mul(node_a(a), node_b(b)), binding))
            expected = target.mul(part_a(ha), part_b(hb))
            results[sa + sb] = target.equal(image, expected)
    return results
