"""tanglekit command line.

Each verb builds one report (see ``tanglekit.report``); the exit code is
0 when something was computed or solved, 1 for no solution, obstruction or
a failed check, 2 for parse and usage errors and 3 for anything outside
what can be decided.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from collections.abc import Callable
from math import gcd
from pathlib import Path
from typing import Any

from tanglekit import __version__
from tanglekit import settings_store as store
from tanglekit.diagram_oracle import (
    OrientedTorusLink2,
    Unrecognized,
    classify_diagram,
    component_count,
    determinant,
    export_crossings,
    expr_to_diagram,
)
from tanglekit.errors import PreconditionError, TangleKitError, UnsupportedError, UsageError
from tanglekit.golden import FIXTURE_DIR, report_golden, write_golden
from tanglekit.oracle_pool import oracle_pool
from tanglekit.report import (
    make_report,
    solution_results,
    to_json,
    to_text,
    verification_summary,
)
from tanglekit.report import exit_code as report_exit_code
from tanglekit.surgery_solver import (
    GammaParams,
    Move,
    SolutionReport,
    Status,
    band_solve,
    gamma_unknot_classify,
    move_equiv_zero,
    move_to_zero_form,
    pathway_check,
    psi_move_solve,
    signature_obstruction,
    solve_2k_to_2k1,
    solve_generalized_M,
    solve_nonband_family,
    verify_families,
    verify_instance,
)
from tanglekit.surgery_solver.band import admitted
from tanglekit.surgery_solver.families import solved
from tanglekit.surgery_solver.verify import CAP_EXCEEDED
from tanglekit.tangle_core import (
    LinkSpec,
    TangleFraction,
    closure_of_rational,
    describe_link,
    format_expr,
    parse_expr,
    parse_fraction,
    parse_link_spec,
    rational_value,
)

logger = logging.getLogger(__name__)

_GLOBAL_FLAGS = ("json", "verbose", "quiet", "cap")
_NEGATIVE_NUMBER = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting and reads -1/3 as a value."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_NUMBER

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _coprime_fraction(text: str) -> TangleFraction:
    """Like parse_fraction, but p/q must already be in lowest terms."""
    f = parse_fraction(text)
    num, _, den = text.strip().partition("/")
    if den and gcd(int(num), int(den)) != 1:
        raise PreconditionError(f"{text.strip()} is not reduced; write {f}", reason="not-reduced")
    return f


def _knot_fraction(text: str) -> TangleFraction:
    return parse_link_spec(text).link.as_fraction()


def _cap(args: argparse.Namespace) -> int:
    return args.cap if getattr(args, "cap", None) is not None else store.crossing_cap()


def _input(args: argparse.Namespace) -> dict[str, Any]:
    skip = {*_GLOBAL_FLAGS, "command", "handler"}
    return {
        k: str(v) if isinstance(v, Path) else v
        for k, v in vars(args).items()
        if k not in skip
    }


def _solver_report(
    args: argparse.Namespace, result: SolutionReport, verify: bool = False
) -> dict[str, Any]:
    """Report for a solver verb, with oracle verification when asked."""
    checks = verify_families(result.families, _cap(args)) if verify else []
    status = result.status.value
    reason = result.reason
    summary = None
    if verify:
        summary = verification_summary(checks)
        if summary["failed"]:
            status, reason = "failed", "verification failed"
        elif len(checks) == 1 and checks[0].status == CAP_EXCEEDED:
            status, reason = "unsupported", "crossing-cap"
    return make_report(
        args.command,
        _input(args),
        status,
        reason,
        solution_results(result, checks),
        summary,
    )


# ---- Verbs ----


def cmd_eval(args: argparse.Namespace) -> dict[str, Any]:
    e = parse_expr(args.expr)
    value = rational_value(e)
    if value is None:
        raise UnsupportedError(f"{format_expr(e)} is not a rational tangle", reason="not-rational")
    return make_report("eval", _input(args), results=str(value))


def cmd_closure(args: argparse.Namespace) -> dict[str, Any]:
    e = parse_expr(args.expr)
    value = rational_value(e)
    if value is None:
        raise UnsupportedError(f"{format_expr(e)} is not a rational tangle", reason="not-rational")
    link = closure_of_rational(value)
    results = {"fraction": str(value), "link": describe_link(link), "components": link.components}
    return make_report("closure", _input(args), results=results)


def cmd_classify(args: argparse.Namespace) -> dict[str, Any]:
    e = parse_expr(args.expr)
    d = expr_to_diagram(e, _cap(args))
    found = classify_diagram(d)
    results: dict[str, Any] = {
        "expr": format_expr(e),
        "crossings": d.crossing_count,
        "components": component_count(d),
        "determinant": determinant(d),
    }
    status, reason = "ok", None
    if isinstance(found, Unrecognized):
        results["link"] = str(found)
        status, reason = Status.UNKNOWN.value, f"unrecognized: {found.reason}"
    else:
        results["link"] = describe_link(found)
    if args.export:
        results["export"] = export_crossings(d)
    return make_report("classify", _input(args), status, reason, results)


def cmd_move_equiv(args: argparse.Namespace) -> dict[str, Any]:
    if args.zero:
        tw, cd = (_coprime_fraction(x) for x in args.zero)
        ok, h = move_equiv_zero(tw.num, tw.den, cd.num, cd.den)
        results = {"equivalent": ok, "h": h}
    else:
        p, r = (_coprime_fraction(x) for x in args.move)
        z = move_to_zero_form(p, r)
        results = {
            "zero_form": f"(0, {z.fraction})",
            "t": z.t,
            "w": z.w,
            "raw": f"(0, {z.raw_t}/{z.raw_w})",
            "e1": z.e1,
            "i1": z.i1,
        }
    return make_report("move-equiv", _input(args), results=results)


def cmd_solve(args: argparse.Namespace) -> dict[str, Any]:
    zv = _knot_fraction(args.product)
    if args.nonband:
        if args.k is None:
            raise UsageError("solve --nonband needs --k")
        family = solve_nonband_family(args.k, zv)
        return _solver_report(args, solved([family]), args.verify)
    if args.tw is None or args.substrate is None:
        raise UsageError("solve needs --tw and --substrate (or --nonband --k)")
    tw = _coprime_fraction(args.tw)
    ab = _knot_fraction(args.substrate)
    return _solver_report(args, solved(solve_generalized_M(ab, tw, zv)), args.verify)


def cmd_band_solve(args: argparse.Namespace) -> dict[str, Any]:
    w = args.w if args.w is not None else store.get_setting("default_w")
    result = band_solve(args.m, args.n, w, OrientedTorusLink2(args.k, args.lk))
    return _solver_report(args, result, args.verify)


def cmd_xer_products(args: argparse.Namespace) -> dict[str, Any]:
    w = args.w if args.w is not None else store.get_setting("default_w")
    families = solve_2k_to_2k1(args.k, w)
    rejected = sum(1 for f in families if not admitted(f))
    notes = [f"{rejected} pair(s) rejected: substrate mismatch"] if rejected else []
    if any(admitted(f) for f in families):
        result = solved(families, *notes)
    else:
        result = SolutionReport(Status.NO_SOLUTION, families, "no solution", notes)
    return _solver_report(args, result, args.verify)


def cmd_psi_solve(args: argparse.Namespace) -> dict[str, Any]:
    result = psi_move_solve(args.k, _knot_fraction(args.product))
    return _solver_report(args, result, args.verify)


def cmd_gamma(args: argparse.Namespace) -> dict[str, Any]:
    g = GammaParams(args.m, args.n, args.p, args.q)
    return make_report("gamma", _input(args), results={"unknotted": gamma_unknot_classify(g)})


def cmd_pathway(args: argparse.Namespace) -> dict[str, Any]:
    w = args.w if args.w is not None else store.get_setting("default_w")
    steps = pathway_check(args.k, w)
    return make_report("pathway", _input(args), results=[s.as_dict() for s in steps])


def cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    u = parse_expr(args.u)
    p, r = (_coprime_fraction(x) for x in args.move)
    move = Move(p, r)
    substrate: LinkSpec = parse_link_spec(args.substrate)
    product: LinkSpec = parse_link_spec(args.product)
    cap = _cap(args)
    check = verify_instance(u, move, substrate, product, cap)
    results = check.as_dict()
    if p.num == 0 and abs(r.num) == 1:
        results["signature"] = str(signature_obstruction(substrate, product, cap))
    status, reason = "ok", None
    if check.failed:
        status, reason = "failed", check.status
    elif check.status == CAP_EXCEEDED:
        status, reason = "unsupported", "crossing-cap"
    return make_report("verify", _input(args), status, reason, results)


def cmd_report(args: argparse.Namespace) -> dict[str, Any]:
    if args.write is not None:
        paths = write_golden(args.write)
        return make_report("report", _input(args), results=[p.name for p in paths])
    results = report_golden(args.corpus)
    bad = [r.name for r in results if r.status != "pass"]
    status, reason = "ok", None
    if bad:
        status, reason = "failed", "fixture-mismatch: " + ", ".join(bad)
    return make_report("report", _input(args), status, reason, [r.as_dict() for r in results])


# ---- Parser ----


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the verb
    flags = _Parser(add_help=False)
    flags.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the JSON report")
    flags.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="debug logging")
    flags.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="errors only")
    flags.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="crossing cap for the oracle")
    return flags


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = _Parser(prog="tanglekit", description="Rational tangle calculus and tangle equations.", parents=[flags])
    parser.add_argument("--version", action="version", version=f"tanglekit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def verb(name: str, handler: Callable[[argparse.Namespace], dict], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[flags])
        p.set_defaults(handler=handler)
        return p

    p = verb("eval", cmd_eval, "fraction of a rational tangle expression")
    p.add_argument("expr")

    p = verb("closure", cmd_closure, "2-bridge link N(e) of a rational expression")
    p.add_argument("expr")

    p = verb("classify", cmd_classify, "identify N(e) from its diagram")
    p.add_argument("expr")
    p.add_argument("--export", action="store_true", help="include the crossing list")

    p = verb("move-equiv", cmd_move_equiv, "compare (0, t/w) moves or reduce a (P, R) move")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--zero", nargs=2, metavar=("T/W", "C/D"))
    group.add_argument("--move", nargs=2, metavar=("P", "R"))

    p = verb("solve", cmd_solve, "generalized M-tangle or non-band rational solutions")
    p.add_argument("--tw", help="the (0, t/w) move")
    p.add_argument("--substrate", help="substrate N(a/b)")
    p.add_argument("--product", required=True, help="product N(z/v)")
    p.add_argument("--nonband", action="store_true", help="families from N(2k)")
    p.add_argument("--k", type=int)
    p.add_argument("--verify", action="store_true")

    p = verb("band-solve", cmd_band_solve, "band surgery from a genus-one knot to T(2,2k)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lk", type=int, required=True, help="linking number of T(2,2k), +-k")
    p.add_argument("--verify", action="store_true")

    p = verb("xer-products", cmd_xer_products, "products of the (0, -1) move on T(2,2k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--w", type=int)
    p.add_argument("--verify", action="store_true")

    p = verb("psi-solve", cmd_psi_solve, "solutions for the (-1/3, -4/3) move on T(2,2k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--product", required=True)
    p.add_argument("--verify", action="store_true")

    p = verb("gamma", cmd_gamma, "is the band core curve unknotted")
    for name in ("--m", "--n", "--p", "--q"):
        p.add_argument(name, type=int, required=True)

    p = verb("pathway", cmd_pathway, "stepwise unlinking from T(2,2k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--w", type=int)

    p = verb("verify", cmd_verify, "check one U against the oracle")
    p.add_argument("u", metavar="U")
    p.add_argument("--move", nargs=2, metavar=("P", "R"), required=True)
    p.add_argument("--substrate", required=True)
    p.add_argument("--product", required=True)

    p = verb("report", cmd_report, "golden corpus")
    p.add_argument("--corpus", type=Path, default=FIXTURE_DIR)
    p.add_argument("--write", type=Path, metavar="DIR")

    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.WARNING
    if getattr(args, "verbose", False):
        level = logging.DEBUG
    elif getattr(args, "quiet", False):
        level = logging.ERROR
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _emit(report: dict[str, Any], as_json: bool) -> None:
    sys.stdout.write(to_json(report) if as_json else to_text(report))


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run one verb, print its report and return the exit code."""
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    as_json = "--json" in argv
    command = next((a for a in argv if not a.startswith("-")), "")
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else 0
    except TangleKitError as e:
        return _fail(command, {"argv": argv}, e.reason, str(e), e.exit_code, as_json)

    _configure_logging(args)
    as_json = getattr(args, "json", False)
    try:
        oracle_pool.configure(int(store.get_setting("oracle_workers")))
        report = args.handler(args)
    except TangleKitError as e:
        return _fail(args.command, _input(args), e.reason, str(e), e.exit_code, as_json)
    except ValueError as e:
        return _fail(args.command, _input(args), "invalid-input", str(e), 2, as_json)
    except Exception as e:
        logger.exception("unexpected failure in %s", args.command)
        return _fail(args.command, _input(args), "internal-error", str(e), 3, as_json)
    finally:
        oracle_pool.shutdown()
    _emit(report, as_json)
    return report_exit_code(report)


def _fail(command: str, input: dict[str, Any], reason: str, message: str, code: int, as_json: bool) -> int:
    if as_json:
        _emit(make_report(command, input, "error", reason, {"message": message}), True)
    else:
        print(f"tanglekit: {message} ({reason})", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
