"""Command-line surface: reproducible experiments with CSV/JSON outputs.

Exit codes: 0 ok, 1 mathematical property violated, 2 invalid config or
budget exceeded, 3 internal cross-check mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import coeffs as ce
from . import gaps as ga
from . import sums2sq as s2
from .character import (
    CurveSpec,
    FormSpec,
    ap_agreement_check,
    deuring_check,
    nonvanishing_correspondence,
)
from .util import BudgetError, atomic_write_text

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_MISMATCH = 3


def _dump_json(obj: dict, path: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path:
        atomic_write_text(path, text)
    else:
        sys.stdout.write(text)


def _form(m: int) -> FormSpec:
    if m % 2 == 0 or m < 1:
        raise ValueError("m must be odd")
    return FormSpec(power_m=m)


def cmd_coeffs(args: argparse.Namespace) -> int:
    spec = _form(args.m)
    if args.strategy == "both":
        series, ok = ce.series_cross_check(args.limit, spec)
        if not ok:
            print("strategy mismatch: recurrence and lattice series differ", file=sys.stderr)
            return EXIT_MISMATCH
    else:
        series = ce.batch_series(args.limit, spec, strategy=args.strategy)
    if args.out:
        ce.write_binary(series, args.out)
    if args.csv:
        atomic_write_text(args.csv, ce.csv_nonzero(series))
    if not args.out and not args.csv:
        sys.stdout.write(ce.csv_nonzero(series))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    curve = CurveSpec(a_param=args.curve_a)
    spec1 = FormSpec(power_m=1)
    limit = args.limit if args.limit else min(10**6, args.pmax**2)
    series = ce.batch_series(limit, spec1)
    report = {
        "config": {
            "pmax": args.pmax,
            "m": args.m,
            "curve_a": args.curve_a,
            "limit": limit,
        },
        "deuring": deuring_check(curve, args.pmax),
        "ap_agreement": (
            ap_agreement_check(curve, spec1, args.pmax)
            if args.curve_a == -1
            else {"skipped": "agreement oracle requires a = -1"}
        ),
        "krw": ce.krw_property_check(series, args.pmax),
        "nonvanishing": nonvanishing_correspondence(args.m, args.pmax),
    }
    n_violations = sum(
        len(v.get("violations", [])) for v in report.values() if isinstance(v, dict)
    )
    report["total_violations"] = n_violations
    _dump_json(report, args.json)
    return EXIT_OK if n_violations == 0 else EXIT_VIOLATION


def cmd_gaps(args: argparse.Namespace) -> int:
    spec = _form(args.m)
    series = ce.batch_series(args.limit, spec, strategy=args.strategy)
    records, summary = ga.max_gap_scan(series, n0=args.n0)
    report: dict = {
        "config": {
            "m": args.m,
            "limit": args.limit,
            "n0": args.n0,
            "strategy": args.strategy,
            "C": args.C,
            "calibrate_prefix": args.calibrate_prefix,
        },
        "summary": summary,
    }
    code = EXIT_OK
    if args.calibrate_prefix:
        prefix = [
            r
            for r in records
            if args.n0 <= r.start <= args.calibrate_prefix and not r.truncated
        ]
        c_cal = max((r.ratio for r in prefix), default=0.0)
        check = ga.bound_check(
            series, C=2 * c_cal, n0=args.calibrate_prefix, records=records
        )
        report["calibration"] = {"C_prefix_max": c_cal, "validate_C": 2 * c_cal}
        report["bound_check"] = check
        if check["violations"]:
            code = EXIT_VIOLATION
    elif args.C is not None:
        check = ga.bound_check(series, C=args.C, n0=args.n0, records=records)
        report["bound_check"] = check
        if check["violations"]:
            code = EXIT_VIOLATION
    if args.csv:
        atomic_write_text(args.csv, ga.records_csv(records))
    _dump_json(report, args.json)
    return code


def cmd_intervals(args: argparse.Namespace) -> int:
    scan = s2.interval_constant_scan(
        args.xlo, args.xhi, N=args.N, stride=args.stride, top_k=args.topk
    )
    scan["config"] = {
        "N": args.N,
        "xlo": args.xlo,
        "xhi": args.xhi,
        "stride": args.stride,
        "topk": args.topk,
    }
    if args.csv:
        atomic_write_text(args.csv, s2.witnesses_csv(scan))
    _dump_json(scan, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cmgaps",
        description="CM eigenform coefficient gaps: generation, verification, analysis",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("coeffs", help="generate a coefficient series")
    pc.add_argument("--m", type=int, default=1, help="odd character power (weight m+1)")
    pc.add_argument("--limit", type=int, required=True)
    pc.add_argument(
        "--strategy", choices=["recurrence", "lattice", "both"], default="recurrence"
    )
    pc.add_argument("--out", help="binary series output path")
    pc.add_argument("--csv", help="nonzero-coefficient CSV output path")
    pc.set_defaults(func=cmd_coeffs)

    pv = sub.add_parser("verify", help="run the four verification suites")
    pv.add_argument("--pmax", type=int, default=10000)
    pv.add_argument("--m", type=int, default=3, help="power for the nonvanishing suite")
    pv.add_argument("--curve-a", type=int, default=-1)
    pv.add_argument("--limit", type=int, help="series limit for the prime-power suite")
    pv.add_argument("--json", help="JSON report path (default stdout)")
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("gaps", help="scan zero-runs and check the n^(1/4) bound")
    pg.add_argument("--m", type=int, default=1)
    pg.add_argument("--limit", type=int, required=True)
    pg.add_argument("--strategy", choices=["recurrence", "lattice"], default="recurrence")
    pg.add_argument("--n0", type=int, default=ga.DEFAULT_N0)
    pg.add_argument("--C", type=float, help="explicit bound constant to validate")
    pg.add_argument(
        "--calibrate-prefix",
        type=int,
        help="calibrate C on runs up to this start, validate 2C beyond it",
    )
    pg.add_argument("--csv", help="gap-record CSV output path")
    pg.add_argument("--json", help="JSON summary path (default stdout)")
    pg.set_defaults(func=cmd_gaps)

    pi = sub.add_parser("intervals", help="sums-of-two-squares short-interval scan")
    pi.add_argument("--N", type=int, default=s2.DEFAULT_COPRIME_N)
    pi.add_argument("--xlo", type=int, required=True)
    pi.add_argument("--xhi", type=int, required=True)
    pi.add_argument("--stride", type=int, default=1)
    pi.add_argument("--topk", type=int, default=10)
    pi.add_argument("--csv", help="top-witness CSV output path")
    pi.add_argument("--json", help="JSON summary path (default stdout)")
    pi.set_defaults(func=cmd_intervals)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
