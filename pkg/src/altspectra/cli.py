"""Command-line front end.

Verbs: build, spectrum, gap, divisor, cut, hmin, decompose, verify.
Reports go to standard output in text (default), JSON, or CSV; progress
notes, if any, go to standard error.  Exit codes: 0 success / all checks
pass, 1 verification failure, 2 usage error, 3 computational failure
(non-convergence or a size cap was hit).

All configuration is explicit flags; no environment variables are read, so
identical argv plus seed always reproduces identical bytes on stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import cheeger as _cheeger
from .cayley import (
    DEFAULT_MAX_ORDER,
    FAMILIES,
    build_cayley,
    build_family,
    custom_generating_set,
    export_edges,
    is_connected,
)
from .errors import ConvergenceError, OrderCapError
from .partition import divisor_closed_form, divisor_spectrum
from .perm import parse_generator_list
from .spectra import DENSE_ORDER_CAP, dense_spectrum, gap_report, integrality_check
from .verify import check_edge_decomposition, check_matchings, check_subgraph_isomorphism, verify_family

VERBS = ("build", "spectrum", "gap", "divisor", "cut", "hmin", "decompose", "verify")


class UsageError(ValueError):
    pass


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altspectra",
        description="Alternating-group Cayley graphs: build, solve, cut, verify.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        p = sub.add_parser(verb)
        p.add_argument("--family", choices=FAMILIES, help="graph family")
        p.add_argument("--gens", help="custom generating set in cycle notation, e.g. '(1,2,3),(1,3,2)'")
        p.add_argument("--n", type=int, required=True, help="number of points")
        p.add_argument("--tol", type=float, default=1e-8, help="solver tolerance")
        p.add_argument("--seed", type=int, default=42, help="start-vector seed")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--max-order", type=int, default=None, help="override size caps")
        p.add_argument("--block", type=int, default=1, help="block value i for cuts and partitions")
        p.add_argument("--timings", action="store_true", help="include real timings in reports")
        if verb == "build":
            p.add_argument("--export-edges", metavar="PATH", help="write the edge list to PATH")
    return parser


def _validate(args) -> None:
    if args.family and args.gens:
        raise UsageError("--family and --gens are mutually exclusive")
    if not args.family and not args.gens:
        raise UsageError("one of --family or --gens is required")
    if args.gens and args.verb in ("divisor", "decompose", "verify"):
        raise UsageError(f"{args.verb} needs a named --family, not a custom --gens set")
    if args.n < 3:
        raise UsageError(f"--n must be at least 3, got {args.n}")
    if args.n > 12:
        raise UsageError(f"--n must be at most 12, got {args.n}")
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if not 1 <= args.block <= args.n:
        raise UsageError(f"--block must be in 1..{args.n}")
    if args.gens:
        # Parse now so malformed notation is rejected before any build work.
        parse_generator_list(args.gens, args.n)


def _build(args):
    max_order = args.max_order if args.max_order is not None else DEFAULT_MAX_ORDER
    if args.family:
        return build_family(args.family, args.n, max_order=max_order)
    gens = custom_generating_set(args.n, parse_generator_list(args.gens, args.n))
    return build_cayley(args.n, gens, max_order=max_order)


def _normalize(value):
    """Round floats to 12 significant digits; make everything JSON-clean."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(f"{float(value):.12g}")
    if isinstance(value, np.ndarray):
        return [_normalize(x) for x in value.tolist()]
    if isinstance(value, dict):
        return {k: _normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_normalize(x) for x in value]
    return str(value)


def _fmt(value) -> str:
    value = _normalize(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def emit(report: dict, fmt: str) -> str:
    """Serialize a report dict: compact JSON, check-per-row CSV, or an
    aligned text table.  LF endings, 12 significant digits."""
    report = _normalize(report)
    if fmt == "json":
        return json.dumps(report, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "predicted", "observed", "tolerance", "pass"])
        if "checks" in report:
            for check in report["checks"]:
                writer.writerow(
                    [
                        check.get("name"),
                        _fmt(check.get("predicted")),
                        _fmt(check.get("observed")),
                        _fmt(check.get("tolerance")),
                        _fmt(check.get("pass")),
                    ]
                )
        else:
            # scalar reports: one key per row in the observed column
            for key, value in report.items():
                writer.writerow([key, "", _fmt(value), "", ""])
        return buf.getvalue()
    lines = []
    checks = report.get("checks")
    scalars = {k: v for k, v in report.items() if k != "checks"}
    if scalars:
        width = max(len(k) for k in scalars)
        for k, v in scalars.items():
            lines.append(f"{k:<{width}}  {_fmt(v)}")
    if checks:
        rows = [["name", "predicted", "observed", "tolerance", "pass"]]
        for check in checks:
            rows.append(
                [
                    str(check.get("name")),
                    _fmt(check.get("predicted")),
                    _fmt(check.get("observed")),
                    _fmt(check.get("tolerance")),
                    _fmt(check.get("pass")),
                ]
            )
        widths = [max(len(r[c]) for r in rows) for c in range(5)]
        for r in rows:
            lines.append("  ".join(f"{r[c]:<{widths[c]}}" for c in range(5)).rstrip())
    return "\n".join(lines) + "\n"


def _run_build(args) -> tuple[dict, int]:
    G = _build(args)
    if getattr(args, "export_edges", None):
        export_edges(G, args.export_edges)
        print(f"edge list written to {args.export_edges}", file=sys.stderr)
    report = {
        "family": getattr(G, "family_tag", "custom"),
        "n": args.n,
        "order": G.order,
        "degree": G.uniform_degree(),
        "edges": G.edge_count,
        "connected": is_connected(G),
    }
    return report, 0


def _run_spectrum(args) -> tuple[dict, int]:
    G = _build(args)
    cap = args.max_order if args.max_order is not None else DENSE_ORDER_CAP
    rep = dense_spectrum(G, tol=args.tol, order_cap=cap)
    integral, worst = integrality_check(rep, tol=max(args.tol, 1e-8))
    out = rep.to_dict()
    out["integral"] = integral
    out["worst_integer_offset"] = worst
    return out, 0


def _run_gap(args) -> tuple[dict, int]:
    G = _build(args)
    rep = gap_report(G, tol=args.tol, seed=args.seed)
    return rep.to_dict(), 0


def _run_divisor(args) -> tuple[dict, int]:
    B = divisor_closed_form(args.family, args.n)
    values = divisor_spectrum(B)
    return {
        "family": args.family,
        "n": args.n,
        "entries": B.entries.tolist(),
        "eigenvalues": [float(v) for v in values],
    }, 0


def _run_cut(args) -> tuple[dict, int]:
    if args.family:
        G = build_family(args.family, args.n, max_order=args.max_order or DEFAULT_MAX_ORDER)
        S = _cheeger.canonical_cut(args.family, args.n, args.block)
        label = f"{args.family} canonical block {args.block}"
    else:
        raise UsageError("cut needs --family (canonical blocks are family-specific)")
    cr = _cheeger.cut_ratio(G, S, description=label)
    report = {"family": args.family, "n": args.n}
    report.update(cr.to_dict())
    return report, 0


def _run_hmin(args) -> tuple[dict, int]:
    G = _build(args)
    cap = args.max_order if args.max_order is not None else 20
    h, witness = _cheeger.brute_force_h(G, max_order=cap)
    return {
        "family": args.family or "custom",
        "n": args.n,
        "order": G.order,
        "h": _fmt(h),
        "h_float": float(h),
        "witness": list(witness),
    }, 0


def _run_decompose(args) -> tuple[dict, int]:
    checks = []
    if args.family == "AG":
        checks.append(check_matchings(args.n, args.block))
    else:
        checks.append(check_edge_decomposition(args.family, args.n))
    checks.append(check_subgraph_isomorphism(args.family, args.n, args.block))
    overall = all(c.passed for c in checks)
    report = {
        "family": args.family,
        "n": args.n,
        "checks": [c.to_dict(args.timings) for c in checks],
        "overall": overall,
    }
    return report, 0 if overall else 1


def _run_verify(args) -> tuple[dict, int]:
    dense_cap = args.max_order if args.max_order is not None else DENSE_ORDER_CAP
    report = verify_family(
        args.family,
        args.n,
        tol=args.tol,
        seed=args.seed,
        dense_cap=dense_cap,
        block_index=args.block,
    )
    return report.to_dict(args.timings), 0 if report.overall else 1


_HANDLERS = {
    "build": _run_build,
    "spectrum": _run_spectrum,
    "gap": _run_gap,
    "divisor": _run_divisor,
    "cut": _run_cut,
    "hmin": _run_hmin,
    "decompose": _run_decompose,
    "verify": _run_verify,
}


def main(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report, code = _HANDLERS[args.verb](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OrderCapError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.verb == "gap" and args.format == "text":
        print(f"{report['gap']:.12g}")
        return code
    sys.stdout.write(emit(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
