"""Command-line interface.

Exit codes: 0 success, 1 domain error (the message names the violated
precondition), 2 verification mismatch in verify mode.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from plethyra import coefficients, diagrams, partitions, schur_weyl, symfunc, verify
from plethyra.coefficients import DomainError
from plethyra.schur_weyl import BudgetError


def parse_partition(text: str) -> tuple:
    """Accept "[3,2,1]", "3,2,1", "[]" or the empty-set glyph."""
    text = text.strip()
    if text in ("", "[]", "()", "∅"):
        return ()
    inner = text.strip("[]()")
    if not inner:
        return ()
    return partitions.as_partition(int(x) for x in inner.split(","))


def format_partition(lam) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def schur_pairs(poly: symfunc.SchurPoly) -> list:
    return [
        {"partition": list(lam), "coefficient": c} for lam, c in poly.to_pairs()
    ]


def emit(report: dict, fmt: str, elapsed_ms: float):
    report = dict(report)
    report["elapsed_ms"] = round(elapsed_ms, 3)
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
    elif fmt == "csv":
        keys = sorted(report)
        print(",".join(keys))
        print(",".join(json.dumps(report[k]) if isinstance(report[k], (list, dict))
                       else str(report[k]) for k in keys))
    else:
        for key in sorted(report):
            print(f"{key}: {report[key]}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plethyra",
        description="Exact plethysm and ramified branching coefficients",
    )
    parser.add_argument("--format", "-f", dest="format_global",
                        choices=("text", "json", "csv"), default=None,
                        help="output format")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", "-f", choices=("text", "json", "csv"),
                        default=None, help="output format")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    p = sub.add_parser("plethysm", help="<s_nu o s_mu, s_lam> or the full expansion")
    p.add_argument("--nu", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--lam")
    p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lam_{mu,nu}")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)

    p = sub.add_parser("rc", help="ramified branching coefficient rc(alpha^beta, kappa)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--kappa", required=True)

    p = sub.add_parser("stable", help="stable plethysm p(beta[n], (m), kappa[mn])")
    p.add_argument("--beta", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("marked", help="count (or list) b-marked partitions of r")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--distinct", action="store_true")
    p.add_argument("--list", action="store_true", dest="list_all")

    p = sub.add_parser("gf", help="marked-partition generating function prefix")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("tableaux-oracle",
                       help="bounded-entry tableaux counts and their difference")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("diagram", help="diagram arithmetic")
    p.add_argument("--compose", nargs=2, metavar="D")
    p.add_argument("--ramified-compose", nargs=2, metavar="R")
    p.add_argument("--prop-data", metavar="D")
    p.add_argument("--prop-index", metavar="R")
    p.add_argument("--orbit-expand", metavar="D")

    p = sub.add_parser("theta", help="the poset of propagating indices")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--bound", type=int, default=diagrams.DEFAULT_THETA_BOUND)

    p = sub.add_parser("dq-check", help="depth-quotient dimension consistency")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--beta", required=True)

    p = sub.add_parser("schur-weyl", help="tensor-space checks")
    p.add_argument("--commute", nargs=3, type=int, metavar=("M", "N", "R"))
    p.add_argument("--negative-control", nargs=3, type=int, metavar=("M", "N", "R"))
    p.add_argument("--rank", nargs=2, type=int, metavar=("D", "R"))
    p.add_argument("--max-entries", type=int, default=schur_weyl.DEFAULT_ENTRY_CAP)

    p = sub.add_parser("verify", help="run a self-verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), default="examples")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or args.format_global or "text"
    start = time.perf_counter()
    try:
        report = dispatch(args)
    except (DomainError, BudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.command == "verify":
        return report  # already printed line by line
    emit(report, fmt, (time.perf_counter() - start) * 1000)
    return 0


def dispatch(args):
    cmd = args.command
    if cmd == "plethysm":
        nu, mu = parse_partition(args.nu), parse_partition(args.mu)
        if args.lam is not None:
            lam = parse_partition(args.lam)
            value = coefficients.plethysm_coefficient(nu, mu, lam, args.max_degree)
            return {
                "query": f"p({format_partition(nu)},{format_partition(mu)},{format_partition(lam)})",
                "value": value, "route": "brute_force", "bounds_met": None,
            }
        degree = sum(nu) * sum(mu)
        ceiling = coefficients._max_degree(args.max_degree)
        if degree > ceiling:
            raise DomainError(
                f"expansion degree {degree} exceeds the ceiling {ceiling}")
        poly = symfunc.plethysm(symfunc.SchurPoly.schur(nu), symfunc.SchurPoly.schur(mu))
        return {
            "query": f"expand s{format_partition(nu)} o s{format_partition(mu)}",
            "value": schur_pairs(poly), "route": "brute_force", "bounds_met": None,
        }
    if cmd == "lr":
        lam, mu, nu = (parse_partition(args.lam), parse_partition(args.mu),
                       parse_partition(args.nu))
        return {
            "query": f"c^{format_partition(lam)}_{format_partition(mu)},{format_partition(nu)}",
            "value": symfunc.lr_coefficient(lam, mu, nu),
            "route": "closed_form", "bounds_met": None,
        }
    if cmd == "rc":
        alpha, beta, kappa = (parse_partition(args.alpha), parse_partition(args.beta),
                              parse_partition(args.kappa))
        value = coefficients.ramified_branching(alpha, beta, kappa)
        return {
            "query": (f"rc({format_partition(alpha)}^{format_partition(beta)},"
                      f"{format_partition(kappa)})"),
            "value": value, "route": "stable_formula", "bounds_met": None,
        }
    if cmd == "stable":
        beta, kappa = parse_partition(args.beta), parse_partition(args.kappa)
        query = coefficients.StableQuery(beta, args.m, args.n, kappa)
        rep = coefficients.stable_plethysm(query, max_degree=args.max_degree)
        return {
            "query": (f"stable beta={format_partition(beta)} m={args.m} n={args.n} "
                      f"kappa={format_partition(kappa)}"),
            "value": rep.value, "route": rep.route, "bounds_met": rep.bounds_met,
        }
    if cmd == "marked":
        if args.distinct:
            found = partitions.marked_partitions_distinct(args.b, args.r)
        else:
            found = partitions.marked_partitions(args.b, args.r, args.cap)
        report = {
            "query": f"marked b={args.b} r={args.r} cap={args.cap} distinct={args.distinct}",
            "value": len(found), "route": "closed_form", "bounds_met": None,
        }
        if args.list_all:
            report["elements"] = [
                {"gamma": list(mp.gamma), "epsilon": list(mp.epsilon)} for mp in found
            ]
        return report
    if cmd == "gf":
        coeffs = partitions.stable_two_row_gf(args.b, args.n)
        return {
            "query": f"gf b={args.b} upto={args.n}", "value": coeffs,
            "route": "closed_form", "bounds_met": None,
        }
    if cmd == "tableaux-oracle":
        upper = partitions.cayley_tableaux_count(args.m, args.n, args.k, args.r)
        lower = partitions.cayley_tableaux_count(args.m, args.n, args.k, args.r - 1)
        return {
            "query": f"T(m={args.m},n={args.n},k={args.k},r={args.r})",
            "value": upper - lower, "count_r": upper, "count_r_minus_1": lower,
            "route": "tableaux_oracle", "bounds_met": None,
        }
    if cmd == "diagram":
        return dispatch_diagram(args)
    if cmd == "theta":
        elements, below = diagrams.theta_poset(args.r, args.bound)
        return {
            "query": f"theta r={args.r}",
            "value": [list(t) for t in elements],
            "relations": {
                str(list(t)): sorted(str(list(u)) for u in lows)
                for t, lows in below.items() if lows
            },
            "route": "closed_form", "bounds_met": None,
        }
    if cmd == "dq-check":
        beta = parse_partition(args.beta)
        diag_dim, formula_dim = diagrams.dq_dimension_check(args.r, beta)
        return {
            "query": f"dq-check r={args.r} beta={format_partition(beta)}",
            "value": [diag_dim, formula_dim], "match": diag_dim == formula_dim,
            "route": "stable_formula", "bounds_met": None,
        }
    if cmd == "schur-weyl":
        return dispatch_schur_weyl(args)
    if cmd == "verify":
        results = verify.run_suite(args.suite)
        return 0 if all(r.passed for r in results) else 2
    raise ValueError(f"unknown command {cmd}")


def dispatch_diagram(args):
    if args.compose:
        d1 = diagrams.PartitionDiagram.parse(args.compose[0])
        d2 = diagrams.PartitionDiagram.parse(args.compose[1])
        sc = diagrams.compose(d1, d2)
        return {
            "query": f"compose {d1.format()} * {d2.format()}",
            "value": sc.diagram.format(), "delta_exponent": sc.exp_out,
            "route": "closed_form", "bounds_met": None,
        }
    if args.ramified_compose:
        r1 = diagrams.RamifiedDiagram.parse(args.ramified_compose[0])
        r2 = diagrams.RamifiedDiagram.parse(args.ramified_compose[1])
        sc = diagrams.ramified_compose(r1, r2)
        return {
            "query": f"ramified compose {r1.format()} * {r2.format()}",
            "value": sc.diagram.format(),
            "delta_in_exponent": sc.exp_in, "delta_out_exponent": sc.exp_out,
            "route": "closed_form", "bounds_met": None,
        }
    if args.prop_data:
        d = diagrams.PartitionDiagram.parse(args.prop_data)
        count, perm = d.propagating_data()
        return {
            "query": f"prop-data {d.format()}", "value": count,
            "permutation": list(perm), "route": "closed_form", "bounds_met": None,
        }
    if args.prop_index:
        rd = diagrams.RamifiedDiagram.parse(args.prop_index)
        return {
            "query": f"prop-index {rd.format()}",
            "value": list(diagrams.propagating_index(rd)),
            "route": "closed_form", "bounds_met": None,
        }
    if args.orbit_expand:
        d = diagrams.PartitionDiagram.parse(args.orbit_expand)
        expansion = diagrams.orbit_expand(d)
        return {
            "query": f"orbit-expand {d.format()}",
            "value": sorted(x.format() for x in expansion),
            "route": "closed_form", "bounds_met": None,
        }
    raise DomainError("diagram requires one of --compose, --ramified-compose, "
                      "--prop-data, --prop-index, --orbit-expand")


def dispatch_schur_weyl(args):
    cap = args.max_entries
    if args.commute:
        m, n, r = args.commute
        ok = schur_weyl.check_commute(m, n, r, cap=cap)
        return {
            "query": f"commute m={m} n={n} r={r}", "value": ok,
            "route": "closed_form", "bounds_met": None,
        }
    if args.negative_control:
        m, n, r = args.negative_control
        ok = schur_weyl.check_commute(m, n, r, cap=cap, swap_roles=True)
        return {
            "query": f"negative-control m={m} n={n} r={r}", "value": ok,
            "route": "closed_form", "bounds_met": None,
        }
    if args.rank:
        d, r = args.rank
        return {
            "query": f"rank d={d} r={r}",
            "value": schur_weyl.faithfulness_rank(d, r, cap=cap),
            "route": "closed_form", "bounds_met": None,
        }
    raise DomainError("schur-weyl requires one of --commute, --negative-control, --rank")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
