"""
ccalg command line.

    ccalg <command> [--op NAME] [--degree N] [--trunc D] [--format text|json]
          [--no-validate] FILE...

Exit codes: 0 when every check of the command passes, 1 when a
mathematical check (including eager validation) fails, 2 on input or usage
errors.
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from . import commands
from .config.settings import settings
from .error_handling import EXIT_CHECK_FAILED, EXIT_OK, handle_exception
from .reports import FORMATS, render, render_error
from .utils.debug_logger import configure_logging
from .workspace import Workspace, load

logger = logging.getLogger(__name__)

Runner = Callable[[Workspace, argparse.Namespace], Dict[str, Any]]


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("files", nargs="+", metavar="FILE", help="bundle JSON files")
    parent.add_argument("--format", choices=FORMATS, default=None, help="report encoding")
    parent.add_argument("--no-validate", action="store_true", help="skip eager validation on load")
    parent.add_argument("--threads", type=int, default=None, help="worker threads")
    return parent


def _op(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--op", default="R", help="operator name (default: R)")


RUNNERS: Dict[str, Runner] = {
    "validate": lambda ws, a: commands.validate_command(ws),
    "check-trb": lambda ws, a: commands.check_trb_command(ws, a.op),
    "graph-check": lambda ws, a: commands.graph_check_command(ws, a.op),
    "induce product": lambda ws, a: commands.induce_command(ws, a.op, "product"),
    "induce bimodule": lambda ws, a: commands.induce_command(ws, a.op, "bimodule"),
    "twisted-delta": lambda ws, a: commands.twisted_delta_command(ws, a.op, a.cochain),
    "cohomology": lambda ws, a: commands.cohomology_command(ws, a.op, a.degree, a.trunc, a.route, a.threads),
    "twist-coboundary": lambda ws, a: commands.twist_coboundary_command(ws, a.cochain),
    "perturb": lambda ws, a: commands.perturb_command(ws, a.op, a.cochain, a.mode),
    "from-inverse": lambda ws, a: commands.from_inverse_command(ws, a.cochain, a.name),
    "bracket": lambda ws, a: commands.bracket_command(ws, *(a.ternary or a.binary)),
    "mc-residual": lambda ws, a: commands.mc_residual_command(ws, a.op),
    "dR": lambda ws, a: commands.d_r_command(ws, a.op, a.cochain),
    "deform linear": lambda ws, a: commands.deform_linear_command(ws, a.op, a.op1),
    "deform formal": lambda ws, a: commands.deform_formal_command(ws, a.series, a.order),
    "deform equiv": lambda ws, a: commands.deform_equiv_command(ws, a.op, a.op1, a.op1_prime, a.element),
    "nijenhuis": lambda ws, a: commands.nijenhuis_command(ws, a.op, a.element),
    "rigidity": lambda ws, a: commands.rigidity_command(ws, a.op, a.trunc, a.threads),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccalg",
        description="Exact checks and constructions for conformal twisted Rota-Baxter operators.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.version}")
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common()

    sub.add_parser("validate", parents=[common], help="load and validate only")
    for name, text in [
        ("check-trb", "twisted Rota-Baxter identity"),
        ("graph-check", "graph closure in the twisted semidirect product"),
        ("mc-residual", "Maurer-Cartan residual of the operator"),
    ]:
        _op(sub.add_parser(name, parents=[common], help=text))

    induce = sub.add_parser("induce", help="structures induced by the operator")
    kinds = induce.add_subparsers(dest="kind", required=True, metavar="KIND")
    _op(kinds.add_parser("product", parents=[common], help="the algebra (U, *)"))
    _op(kinds.add_parser("bimodule", parents=[common], help="T as a bimodule over (U, *)"))

    p = sub.add_parser("twisted-delta", parents=[common], help="seven-term twisted coboundary")
    _op(p)
    p.add_argument("--cochain", required=True)

    p = sub.add_parser("dR", parents=[common], help="d_R = [[R,-]] - 1/2 [[R,R,-]]")
    _op(p)
    p.add_argument("--cochain", required=True)

    p = sub.add_parser("cohomology", parents=[common], help="truncated cohomology dimensions")
    _op(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--route", choices=["twisted", "linf"], default="twisted")

    p = sub.add_parser("twist-coboundary", parents=[common], help="H + dh and the isomorphism check")
    p.add_argument("--cochain", required=True, help="1-cochain h on T with values in U")

    p = sub.add_parser("perturb", parents=[common], help="move the graph of R by h")
    _op(p)
    p.add_argument("--cochain", required=True, help="1-cochain h on T with values in U")
    p.add_argument("--mode", choices=["xi", "phi"], default="xi")

    p = sub.add_parser("from-inverse", parents=[common], help="R = h^(-1) with H = -dh")
    p.add_argument("--cochain", required=True)
    p.add_argument("--name", default="R")

    p = sub.add_parser("bracket", parents=[common], help="binary or ternary bracket of cochains")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--binary", nargs=2, metavar=("A", "B"))
    group.add_argument("--ternary", nargs=3, metavar=("A", "B", "C"))

    deform = sub.add_parser("deform", help="deformations of an operator")
    kinds = deform.add_subparsers(dest="kind", required=True, metavar="KIND")
    p = kinds.add_parser("linear", parents=[common], help="the four coefficient identities of R + t R1")
    _op(p)
    p.add_argument("--op1", required=True)
    p = kinds.add_parser("formal", parents=[common], help="deformation equations of a series")
    p.add_argument("--series", required=True)
    p.add_argument("--order", type=int, default=None)
    p = kinds.add_parser("equiv", parents=[common], help="order-one equivalence generated by an element")
    _op(p)
    p.add_argument("--op1", required=True)
    p.add_argument("--op1-prime", required=True)
    p.add_argument("--element", required=True)

    p = sub.add_parser("nijenhuis", parents=[common], help="Nijenhuis element test")
    _op(p)
    p.add_argument("--element", required=True)

    p = sub.add_parser("rigidity", parents=[common], help="truncated rigidity witness")
    _op(p)
    p.add_argument("--trunc", type=int, default=None)
    return parser


def _command_name(args: argparse.Namespace) -> str:
    return f"{args.command} {args.kind}" if args.command in ("deform", "induce") else args.command


def run_file(path: str, args: argparse.Namespace) -> int:
    """Load one file, run the command and print the report; returns the exit code."""
    command = _command_name(args)
    validate = False if args.no_validate else None
    output_format = args.format or settings.output_format
    try:
        ws = load(path, validate=validate)
        output_format = ws.output_format(args.format)
        outcome = RUNNERS[command](ws, args)
    except Exception as exc:
        error = handle_exception(exc, {"command": command, "file": path})
        print(render_error(error, output_format), file=sys.stdout if output_format == "json" else sys.stderr)
        return error["exit_code"]
    print(render(outcome, output_format))
    return EXIT_OK if outcome["passed"] else EXIT_CHECK_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    codes = [run_file(path, args) for path in args.files]
    return max(codes)


if __name__ == "__main__":
    sys.exit(main())
