"""
Newton Strata Command Line
==========================
Batch front-end over the library.

    describe GROUP
    bgmu     GROUP --mu MU [--format table|json|dot]
    eo       GROUP --element "LAMBDA|WORD"
    rzdim    GROUP --mu MU (--class-index I | --nu NU)
    elchart  --h H (--m M [--d D] | --m-seq M0,M1,...)
    verify   GROUP --mu MU

Exit status: 0 on success, 1 on usage or input errors, 2 when a
verification fails.
"""

import argparse
import sys
from typing import Any, Optional, Sequence

from loguru import logger

from ..config.settings import get_settings
from ..core.exceptions import (
    EnumerationError,
    NewtonStrataError,
    PreconditionError,
    VerificationError,
)
from ..groups.root_datum import GroupKind
from ..linalg.exact import dot
from ..utils.helpers import to_json_ready
from ..utils.logger import setup_logger
from ..affine.affine_weyl import is_sigma_straight
from ..affine.straight import is_fundamental
from ..affine.truncation import eo_truncation
from ..newton.kottwitz_set import class_of_mu, enumerate_BGmu
from ..newton.sigma_class import is_superbasic
from ..dimensions.formulas import bgmu_report, stratum_report, verify_identities, check_minimal_eo_strata
from ..dimensions.levi import reduction_check
from ..el_charts.charts import (
    ELChartParams,
    enumerate_charts,
    floor_formula_dim,
    hodge_point,
    superbasic_rz_dim,
    v_count,
)
from . import render
from .parsing import parse_element, parse_group, parse_m_seq, parse_rational_vector, parse_vector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="newton", description="Newton strata invariants of unramified groups")
    parser.add_argument("--log-level", default=None, help="Console/file log level (default: LOG_LEVEL)")
    parser.add_argument("--output", "-o", default=None, help="Write the payload to this file")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("describe", help="Root datum summary")
    p.add_argument("group")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("bgmu", help="List B(G, mu) with dimensions")
    p.add_argument("group")
    p.add_argument("--mu", required=True)
    p.add_argument("--format", choices=["table", "json", "dot"], default="table")
    p.add_argument("--window-pad", type=int, default=None)

    p = sub.add_parser("eo", help="Ekedahl-Oort truncation of an element")
    p.add_argument("group")
    p.add_argument("--element", required=True, help='e.g. "1,0|id" or "1,0,0,1|t0:s1"')
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("rzdim", help="Dimensions of one class, with the Levi reduction for gl")
    p.add_argument("group")
    p.add_argument("--mu", required=True)
    selector = p.add_mutually_exclusive_group(required=True)
    selector.add_argument("--class-index", type=int, help="Row index in the bgmu listing")
    selector.add_argument("--nu", help="Newton point, e.g. 1/2,1/2")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("elchart", help="Superbasic EL-charts")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    amount = p.add_mutually_exclusive_group(required=True)
    amount.add_argument("--m", type=int, help="Total m, spread over the d slots")
    amount.add_argument("--m-seq", help="Per-slot m_tau, e.g. 1,0")
    p.add_argument("--mu", default=None, help="Hodge point, lower-triangular convention")
    p.add_argument("--list", action="store_true", help="Also list every chart")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("verify", help="Check every identity on B(G, mu)")
    p.add_argument("group")
    p.add_argument("--mu", required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    return parser


def _payload(args: argparse.Namespace, data: dict[str, Any], text: str) -> str:
    return render.dumps(data) if args.format == "json" else text


def cmd_describe(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    info = render.describe_group(G)
    render.emit(_payload(args, to_json_ready(info), render.describe_text(info)), args.output)
    return EXIT_OK


def cmd_bgmu(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    mu = parse_vector(args.mu)
    kwargs = {} if args.window_pad is None else {"window_pad": args.window_pad}
    report = bgmu_report(G, mu, **kwargs)
    if args.format == "json":
        text = render.dumps(render.bgmu_json(report))
    elif args.format == "dot":
        text = render.bgmu_dot(report)
    else:
        text = render.bgmu_frame(report).to_string()
    render.emit(text, args.output)
    return EXIT_OK


def cmd_eo(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    x = parse_element(G, args.element)
    result = eo_truncation(x)
    data = render.truncation_json(result, is_sigma_straight(x), is_fundamental(x))
    render.emit(_payload(args, data, render.key_value_text(data)), args.output)
    return EXIT_OK


def _select_class(G, mu, args: argparse.Namespace):
    classes = enumerate_BGmu(G, mu)
    if args.class_index is not None:
        if not 0 <= args.class_index < len(classes):
            raise PreconditionError(f"class index {args.class_index} outside 0..{len(classes) - 1}")
        return classes[args.class_index]
    nu = parse_rational_vector(args.nu)
    for c in classes:
        if c.nu == nu:
            return c
    raise PreconditionError(f"no class with nu={nu} in B({G}, {mu})")


def cmd_rzdim(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    mu = parse_vector(args.mu)
    c = _select_class(G, mu, args)
    row = stratum_report(G, mu, c, class_of_mu(G, mu))
    data = to_json_ready({
        "nu": c.nu,
        "kappa": c.kappa,
        "defect": row.defect,
        "dim_rz": row.dim_rz,
        "dim_rz_floor": row.dim_rz_floor,
        "dim_rz_orbit_average": row.dim_rz_orbit_average,
        "dim_newton": row.dim_newton,
        "dim_central_leaf": row.dim_central_leaf,
        "superbasic": is_superbasic(c),
    })
    status = EXIT_OK
    if G.kind is GroupKind.RES_GL and not is_superbasic(c):
        reduction = reduction_check(G, mu, c)
        data["levi_reduction"] = render.reduction_json(reduction)
        if not reduction.passed:
            status = EXIT_VERIFICATION
    if row.failures(2 * dot(G.rho, mu)):
        status = EXIT_VERIFICATION
    render.emit(_payload(args, data, render.key_value_text(data)), args.output)
    return status


def cmd_elchart(args: argparse.Namespace) -> int:
    if args.m_seq is not None:
        m_seq = parse_m_seq(args.m_seq)
        params = ELChartParams(len(m_seq), args.h, m_seq)
    else:
        params = ELChartParams.single(args.d, args.h, args.m)
    mu = parse_vector(args.mu) if args.mu else None
    charts = enumerate_charts(params, mu)
    data: dict[str, Any] = {
        "d": params.d,
        "h": params.h,
        "m_seq": params.m_seq,
        "charts": len(charts),
        "max_v": superbasic_rz_dim(params, mu),
        "floor_formula": floor_formula_dim(params),
    }
    if args.list:
        data["chart_list"] = [
            {"b0": c.b0, "eps": c.eps, "v": v_count(c), "hodge": hodge_point(c)} for c in charts
        ]
    data = to_json_ready(data)
    render.emit(_payload(args, data, render.key_value_text(data)), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    mu = parse_vector(args.mu)
    failures: list[str] = []
    try:
        report = bgmu_report(G, mu, check_stability=True)
    except EnumerationError as e:
        failures.append(f"window stability: {e}")
        report = bgmu_report(G, mu, check_stability=False)
    identities = verify_identities(G, mu, report)
    failures += [f"nu={render.fmt_vector(nu)}: {name}" for nu, name in identities.failures]

    if G.kind is GroupKind.RES_GL:
        for row in report.rows:
            c = row.sigma_class
            if is_superbasic(c):
                continue
            reduction = reduction_check(G, mu, c)
            if not reduction.passed:
                failures.append(f"nu={render.fmt_vector(c.nu)}: Levi reduction")
    if G.is_minuscule(mu):
        for row in check_minimal_eo_strata(G, mu):
            if not row.passed:
                failures.append(f"nu={render.fmt_vector(row.nu)}: minimal EO stratum")

    if failures:
        summary = f"{len(failures)} identity failures over {identities.classes} classes"
    else:
        summary = identities.summary()
    data = {"group": repr(G), "mu": list(mu), "classes": identities.classes,
            "passed": not failures, "summary": summary, "failures": failures}
    text = "\n".join([summary] + [f"  {f}" for f in failures])
    render.emit(_payload(args, to_json_ready(data), text), args.output)
    if failures:
        logger.warning(summary)
        return EXIT_VERIFICATION
    logger.success(summary)
    return EXIT_OK


COMMANDS = {
    "describe": cmd_describe,
    "bgmu": cmd_bgmu,
    "eo": cmd_eo,
    "rzdim": cmd_rzdim,
    "elchart": cmd_elchart,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{parser.format_usage()}{e}\n")
        return EXIT_USAGE

    settings = get_settings()
    setup_logger(log_level=(args.log_level or settings.log_level).upper(), log_file=settings.log_file,
                 context=args.command)
    try:
        return COMMANDS[args.command](args)
    except (VerificationError, EnumerationError) as e:
        logger.error(f"verification failed: {e}")
        return EXIT_VERIFICATION
    except NewtonStrataError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
