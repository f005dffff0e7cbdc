"""Command-line front end: python -m app.cli <group> <action> [options]

Exit status: 0 verified, 1 a mathematical mismatch was found, 2 usage error,
3 a configured resource cap was hit.
"""
import argparse
import contextlib
import csv
import io
import logging
import sys
from typing import Iterator, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from app import reports, schemas
from app.characters import compare_sides, euler_character, rhs_character
from app.config import get_settings
from app.errors import ArgumentError, CertificationError, ConfigurationError, ResourceLimitError
from app.fock_engine import graded_basis, kernel_graded_dims
from app.lambda_calc import condequiv_scan, epsilon_chain, novel_scan
from app.qz_series import dump_text
from app.relations import relation_suite
from app.root_data import parse_type
from app.tables import dump_steps
from app.utils import configure_logging, parse_fraction

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _int_list(text: str) -> List[int]:
    return [int(c) for c in text.split(",") if c.strip()]


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="A1", help="Simply-laced type and rank, e.g. A2, D4, E6 (default: A1)")
    common.add_argument("-p", type=int, default=2, help="Level p >= 2 (default: 2)")
    common.add_argument("--lambda", dest="lam", default="0", help="'0' or 'hat=<index|0>,s=<c1,...,cl>'")
    common.add_argument("--format", choices=[f.value for f in schemas.OutputFormat], default=None)
    common.add_argument("--max-basis", type=int, default=None, help="Override LOGW_MAX_BASIS")
    common.add_argument("--max-weyl", type=int, default=None, help="Override LOGW_MAX_WEYL")
    common.add_argument("--log-level", default=None, help="Override LOGW_LOG_LEVEL")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(
        prog="python -m app.cli",
        description="Exact verification pipelines for logarithmic W-algebras of simply-laced type.",
    )
    groups = ap.add_subparsers(dest="group", required=True)

    root = groups.add_parser("root", help="Root data").add_subparsers(dest="action", required=True)
    root.add_parser("info", parents=[common], help="Cartan matrix, roots, rho, theta, h, w0 word")

    lam = groups.add_parser("lambda", help="The parameter set").add_subparsers(dest="action", required=True)
    lam.add_parser("list", parents=[common], help="All parameters with alcove flags")

    eps = groups.add_parser("epsilon", help="Epsilon calculus").add_subparsers(dest="action", required=True)
    chain = eps.add_parser("chain", parents=[common], help="Step-by-step epsilon chain along a reduced word")
    chain.add_argument("--word", type=_int_list, default=None, help="Comma-separated reduced word (default: w0)")
    of = eps.add_parser("of", parents=[common], help="eps_lambda(w) for a reduced word")
    of.add_argument("--word", type=_int_list, required=True)
    eps.add_parser("table2", parents=[common], help="Generated epsilon steps against the transcribed table")

    cond = groups.add_parser("cond", help="Chain condition against the alcove").add_subparsers(dest="action", required=True)
    cond.add_parser("check", parents=[common], help="Condition, alcove and novel flags for one parameter")
    scan = cond.add_parser("scan", parents=[common], help="Exhaustive scan over the parameter set")
    scan.add_argument("--novel", action="store_true", help="Also list parameters with the novel condition outside the alcove")

    char = groups.add_parser("char", help="Character identity").add_subparsers(dest="action", required=True)
    for name in ("euler", "rhs", "compare"):
        sub = char.add_parser(name, parents=[common])
        sub.add_argument("--qmax", type=parse_fraction, default=parse_fraction("6"), help="Bound on Delta")
        sub.add_argument("--unsafe", action="store_true", help="Compute the rhs side outside the alcove")

    fock = groups.add_parser("fock", help="Fock-space computations").add_subparsers(dest="action", required=True)
    for name in ("basis", "kernel", "relations"):
        sub = fock.add_parser(name, parents=[common])
        sub.add_argument("--deltamax", type=parse_fraction, default=parse_fraction("3"), help="Bound on conformal weight")
        if name == "kernel":
            sub.add_argument("-J", type=_int_list, default=None, help="Comma-separated screening indices (default: all)")
            sub.add_argument("--refine", action="store_true", help="Refine kernel dimensions by h-weight")

    dims = groups.add_parser("dims", parents=[common], help="dim H^n(P_i x_B C_mu) from (mu, alpha_i)")
    dims.add_argument("--pairing", type=int, required=True, help="(mu, alpha_i)")
    dims.add_argument("--degree", type=int, default=0, help="Cohomological degree n")
    return ap


@contextlib.contextmanager
def _caps(args: argparse.Namespace) -> Iterator[None]:
    settings = get_settings()
    saved = (settings.max_basis, settings.max_weyl)
    try:
        if args.max_basis is not None:
            settings.max_basis = args.max_basis
        if args.max_weyl is not None:
            settings.max_weyl = args.max_weyl
        yield
    finally:
        settings.max_basis, settings.max_weyl = saved


def _csv(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _render(model: BaseModel, fmt: str, csv_rows=None, csv_header=None, text: Optional[str] = None) -> str:
    if fmt == "csv" and csv_rows is not None:
        return _csv(csv_rows, csv_header)
    if fmt == "text" and text is not None:
        return text + "\n"
    if fmt != "json":
        logger.info("format %s not available here, writing json", fmt)
    return model.model_dump_json(by_alias=True, indent=2) + "\n"


def _run(args: argparse.Namespace, out) -> int:
    fmt = args.format or get_settings().default_format
    if args.group == "dims":
        out.write(_render(reports.dims_report(args.pairing, args.degree), fmt))
        return EXIT_OK

    rs = parse_type(args.type)
    try:
        config = schemas.RunConfig(
            type=args.type,
            p=args.p,
            lam=schemas.LambdaSpec.parse(args.lam),
            qmax=str(getattr(args, "qmax", "6")),
            deltamax=str(getattr(args, "deltamax", "3")),
            format=fmt,
            max_basis=args.max_basis,
            max_weyl=args.max_weyl,
            unsafe=getattr(args, "unsafe", False),
        )
    except (ValueError, ValidationError) as exc:
        raise ArgumentError(str(exc))
    spec = config.lam
    action = (args.group, args.action)

    if action == ("root", "info"):
        out.write(_render(reports.root_info(rs), fmt))
        return EXIT_OK

    if action == ("lambda", "list"):
        report = schemas.LambdaListReport(type=rs.name, p=args.p, entries=reports.lambda_entries(rs, args.p))
        rows = [(e.label, e.hat, " ".join(map(str, e.s)), e.in_alcove, e.on_wall) for e in report.entries]
        out.write(_render(report, fmt, rows, ("label", "hat", "s", "in_alcove", "on_wall")))
        return EXIT_OK

    lam = reports.to_param(rs, args.p, spec)

    if action == ("epsilon", "chain"):
        report = reports.chain_report(rs, epsilon_chain(rs, lam, args.word))
        rows = [(s.position, s.reflection, " ".join(map(str, s.step)), " ".join(map(str, s.cumulative)), s.state)
                for s in report.steps]
        out.write(_render(report, fmt, rows, ("position", "reflection", "step", "cumulative", "state")))
        return EXIT_OK
    if action == ("epsilon", "of"):
        report = reports.epsilon_value(rs, lam, args.word)
        out.write(_render(report, fmt))
        return EXIT_OK if report.epsilon == report.direct and report.recursion else EXIT_MISMATCH
    if action == ("epsilon", "table2"):
        report = reports.step_table_report(rs, lam)
        blocks = [tuple(tuple(e) for e in block) for block in report.blocks]
        out.write(_render(report, fmt, text=dump_steps(rs, blocks)))
        return EXIT_OK if report.matches else EXIT_MISMATCH

    if action == ("cond", "check"):
        out.write(_render(reports.cond_check(rs, lam), fmt))
        return EXIT_OK
    if action == ("cond", "scan"):
        scan = condequiv_scan(rs, args.p)
        novel = novel_scan(rs, args.p) if args.novel else None
        report = reports.cond_scan_report(scan, novel)
        rows = [(label, "mismatch") for label in report.mismatches]
        rows += [(label, "sum_failure") for label in report.sum_failures]
        out.write(_render(report, fmt, rows, ("lambda", "kind")))
        return EXIT_OK if not (report.mismatches or report.sum_failures) else EXIT_MISMATCH

    if args.group == "char":
        if args.action == "euler":
            side = euler_character(rs, lam, args.qmax)
        elif args.action == "rhs":
            side = rhs_character(rs, lam, args.qmax, unsafe=args.unsafe)
        else:
            rhs = rhs_character(rs, lam, args.qmax, unsafe=args.unsafe)
            result = compare_sides(euler_character(rs, lam, args.qmax), rhs)
            report = reports.compare_report(rs, lam, result, rhs.conjectural)
            rows = [(d.q, " ".join(map(str, d.z)), d.lhs, d.rhs) for d in report.diffs]
            out.write(_render(report, fmt, rows, ("q", "z", "euler", "rhs")))
            return EXIT_OK if result.matches else EXIT_MISMATCH
        report = reports.series_report(rs, side)
        rows = [(t.q, " ".join(map(str, t.z)), t.coefficient) for t in report.terms]
        out.write(_render(report, fmt, rows, ("q", "z", "coefficient"), dump_text(side.series)))
        return EXIT_OK

    if args.deltamax < 0:
        raise ArgumentError(f"--deltamax must be non-negative, got {args.deltamax}")
    if action == ("fock", "basis"):
        basis = graded_basis(rs, lam, args.deltamax)
        report = reports.basis_report(rs, lam, args.deltamax, basis)
        rows = [(v.delta, " ".join(map(str, v.point)), " ".join(f"{j}:{n}" for j, n in v.creations)) for v in report.vectors]
        out.write(_render(report, fmt, rows, ("delta", "point", "creations")))
        return EXIT_OK
    if action == ("fock", "kernel"):
        J = range(1, rs.rank + 1) if args.J is None else args.J
        kernel = kernel_graded_dims(rs, lam, J, args.deltamax, refine_by_weight=args.refine)
        report = reports.kernel_report(rs, kernel, args.refine)
        rows = [(e.delta, e.ambient, e.kernel) for e in report.entries]
        out.write(_render(report, fmt, rows, ("delta", "ambient", "kernel")))
        return EXIT_OK
    if action == ("fock", "relations"):
        suite = relation_suite(rs, args.p, args.deltamax, lam)
        report = reports.relation_report(suite)
        rows = [(c.name, c.checked, c.passed, c.skipped) for c in report.checks]
        out.write(_render(report, fmt, rows, ("check", "checked", "passed", "skipped")))
        return EXIT_OK if report.passed else EXIT_MISMATCH
    raise ArgumentError(f"Unknown command {args.group} {args.action}")


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.log_level or get_settings().log_level)
    try:
        with _caps(args):
            return _run(args, out)
    except (ArgumentError, ConfigurationError) as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        logger.error("%s", exc)
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CertificationError as exc:
        logger.error("%s", exc)
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
