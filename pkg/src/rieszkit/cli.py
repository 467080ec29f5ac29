"""
rieszkit.cli - Command-line surface.

Exit codes: 0 ok, 1 internal or configuration error, 2 parse error,
3 binding or domain error, 4 check failure, 5 budget or fuel exhausted.
Reports go to ``--out`` (or stdout) as canonical JSON; logs go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from .adapters import CsvAdapter, JsonAdapter, load_file
from .bindings import BindingFile, TensorBindingFile
from .closure import LadderBasis, ladder_extend, ladder_report
from .config import RunConfig, budget_scope, load_run_config
from .exceptions import CheckFailure, RieszKitError
from .expr import Expr, ModelBinding, Mul, eval_in_model, parse_expr
from .numeric import format_rational
from .pwfun import pw_eval
from .rewrite import Certificate, check_certificate, dump_json, make_certificate
from .suites import SUITES, run_suite
from .tensor import riesz_tensor_check

__all__ = ("build_parser", "main")

logger = logging.getLogger("rieszkit")


# ------------------------------------------------------------------ helpers
def _grid(text: str) -> tuple[int, int]:
    try:
        nx, ny = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected nx,ny, got {text!r}") from None
    return nx, ny


def _expression(text: str) -> Expr:
    """An expression literal, or ``@path`` for a file holding one."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    return parse_expr(text.strip())


def _emit(data: bytes | str, out: Path | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out is None:
        sys.stdout.write(data.decode())
    else:
        out.write_bytes(data)
        logger.info("wrote %s", out)


def _config(args: argparse.Namespace) -> RunConfig:
    return load_run_config(args.config).with_overrides(
        seed=args.seed,
        trials=args.trials,
        degree_cap=args.degree_cap,
        bits_cap=args.bits_cap,
        fuel=args.fuel,
        grid=args.grid,
        out=args.out,
    )


def _binding(path: Path | None) -> tuple[BindingFile | None, list[ModelBinding]]:
    if path is None:
        return None, []
    spec = load_file(BindingFile, path)
    return spec, [spec.to_binding()]


def _render(binding: ModelBinding, value: Any) -> str:
    data = binding.model.to_json(value)
    if isinstance(data, str):
        return data + "\n"
    return dump_json(data).decode()


# ----------------------------------------------------------------- commands
def cmd_eval(args: argparse.Namespace, config: RunConfig) -> int:
    expr = _expression(args.expr)
    spec, (binding,) = _binding(args.binding)
    value = eval_in_model(expr, binding)
    point = args.point if args.point is not None else spec.point
    if point is not None and binding.kind == "pwfun":
        spec = spec.model_copy(update={"point": point})
        _emit(format_rational(pw_eval(value, spec.evaluation_point())) + "\n", config.out)
    else:
        _emit(_render(binding, value), config.out)
    return 0


def cmd_certify(args: argparse.Namespace, config: RunConfig) -> int:
    _, bindings = _binding(args.binding)
    try:
        cert = make_certificate(
            _expression(args.f),
            _expression(args.g),
            bindings,
            seed=config.seed,
            trials=config.trials,
            vector_dim=config.vector_dim,
            simplify=args.simplify,
        )
    except CheckFailure as exc:
        if config.out is not None and "certificate" in exc.details:
            _emit(dump_json(exc.details["certificate"]), config.out)
        raise
    _emit(cert.to_json(), config.out)
    return 0


def cmd_check_cert(args: argparse.Namespace, config: RunConfig) -> int:
    cert = JsonAdapter.from_obj(Certificate, args.certificate)
    _, bindings = _binding(args.binding)
    fresh = check_certificate(cert, bindings)
    _emit(fresh.to_json(), config.out)
    return 0


def cmd_closure(args: argparse.Namespace, config: RunConfig) -> int:
    _, (binding,) = _binding(args.binding)
    ladder = LadderBasis.from_generators(
        binding.model,
        binding.generators,
        product_degree=args.product_degree,
        include_unit=args.include_unit,
        carrier=binding.carrier,
        seed=config.seed,
    )
    for _ in range(args.levels - 1):
        ladder = ladder_extend(ladder, config.probe_count, config.seed)
    report = ladder_report(
        ladder, seed=config.seed, probe_count=config.probe_count, budget=config.budget
    )
    _emit(dump_json(report.model_dump(mode="json")), config.out)
    return 0


def cmd_tensor_check(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_file(TensorBindingFile, args.binding)
    binding = spec.to_binding()
    grid = args.grid or spec.grid.shape
    f, g = _expression(args.f), _expression(args.g)
    cert = riesz_tensor_check(
        f, g, binding, grid, seed=config.seed, trials=config.trials
    )
    if args.csv is not None:
        grid_binding = binding.grid_binding(grid)
        columns = {
            "lhs": eval_in_model(Mul(f, g), grid_binding),
            "rhs": eval_in_model(cert.rhs(), grid_binding),
        }
        args.csv.write_text(CsvAdapter.to_obj(columns))
        logger.info("wrote %s", args.csv)
    _emit(cert.to_json(), config.out)
    return 0


def cmd_suite(args: argparse.Namespace, config: RunConfig) -> int:
    summary = run_suite(args.name, config)
    _emit(dump_json(summary.to_report()), config.out)
    print(
        f"suite {summary.suite}: {summary.passed}/{summary.total} passed",
        file=sys.stderr,
    )
    if not summary.ok:
        raise CheckFailure(
            f"Suite {summary.suite} failed {summary.failed} case(s)",
            counterexample=summary.counterexample,
        )
    return 0


# ------------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--degree-cap", type=int, default=None)
    common.add_argument("--bits-cap", type=int, default=None)
    common.add_argument("--fuel", type=int, default=None)
    common.add_argument("--grid", type=_grid, default=None, metavar="NX,NY")
    common.add_argument("--out", type=Path, default=None)
    common.add_argument("--config", type=Path, default=None, help="TOML run config")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="rieszkit",
        description="Exact checks for Archimedean Riesz spaces and f-algebras.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr", help="expression text or @file")
    p.add_argument("binding", type=Path)
    p.add_argument("--point", default=None, help="rational point for pwfun values")
    p.set_defaults(handler=cmd_eval)

    p = commands.add_parser("certify", parents=[common], help="certify a product")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("binding", type=Path, nargs="?", default=None)
    p.add_argument("--simplify", action="store_true", help="merge scale chains")
    p.set_defaults(handler=cmd_certify)

    p = commands.add_parser("check-cert", parents=[common], help="re-check a certificate")
    p.add_argument("certificate", type=Path)
    p.add_argument("binding", type=Path, nargs="?", default=None)
    p.set_defaults(handler=cmd_check_cert)

    p = commands.add_parser("closure", parents=[common], help="grow the closure ladder")
    p.add_argument("binding", type=Path)
    p.add_argument("--levels", type=int, default=3, choices=range(1, 65), metavar="N")
    p.add_argument("--product-degree", type=int, default=1)
    p.add_argument("--include-unit", action="store_true")
    p.set_defaults(handler=cmd_closure)

    p = commands.add_parser(
        "tensor-check", parents=[common], help="certify a product of tensors"
    )
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("binding", type=Path)
    p.add_argument("--csv", type=Path, default=None, help="dump lhs/rhs grids")
    p.set_defaults(handler=cmd_tensor_check)

    p = commands.add_parser("suite", parents=[common], help="run an acceptance suite")
    p.add_argument("name", choices=[*SUITES, "all"])
    p.set_defaults(handler=cmd_suite)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING - 10 * min(verbosity, 2)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.handlers[:] = [handler]
    logger.setLevel(level)
    logger.propagate = False


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = _config(args)
        with budget_scope(config.budget):
            return args.handler(args, config)
    except RieszKitError as exc:
        logger.error("%s", exc)
        print(dump_json(exc.to_dict()).decode(), file=sys.stderr, end="")
        return exc.exit_code
    except OSError as exc:
        logger.error("%s", exc)
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
