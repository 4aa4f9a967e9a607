"""Command-line surface: exact tables, identity verification suites, and
the Monte Carlo cross-check.

Output contract: tables are headerless CSV (or a single JSON object with
``--format json``); verification suites and the Monte Carlo check emit one
JSON object per line. Rational values are always rendered losslessly as
``num/den`` strings (bare integers when the denominator is 1), never as
floats; only Monte Carlo estimates and standard errors are floating point.

Exit codes: 0 when everything passes, 1 when a verified mathematical or
statistical comparison fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .appell import family_seed, theorem12_check
from .distributions import (
    format_distribution,
    parse_distribution,
    sum_moment,
)
from .exact_core import bell_poly, cnn_table, stirling1, stirling2
from .gen_stirling import sy
from .montecarlo import estimate_sum_moment
from .sums import (
    IdentityReport,
    verify_bernoulli_classic,
    verify_corollary8,
    verify_gf,
    verify_paths,
    verify_theorem1,
    verify_theorem9,
    verify_theorem10,
    verify_theorem11,
)

SCHEMA_VERSION = 1

TABLE_KINDS = ("stirling2", "stirling1", "cnn", "sy", "bell")
VERIFY_SUITES = (
    "corollary8",
    "theorem1",
    "theorem9",
    "theorem10",
    "theorem11",
    "theorem12",
    "gf",
    "paths",
    "bernoulli-classic",
)

# per-suite (n_max, N_max) defaults; None where a suite takes no N
_SUITE_DEFAULTS = {
    "corollary8": (5, 10),
    "theorem1": (5, 10),
    "theorem9": (6, 12),
    "theorem10": (6, 12),
    "theorem11": (4, 12),
    "theorem12": (6, 12),
    "gf": (6, None),
    "paths": (6, None),
    "bernoulli-classic": (8, 15),
}


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:  # argparse only converts ValueError
        raise ValueError(str(exc)) from exc


def _render(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return value


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _emit_report(report: IdentityReport) -> None:
    _emit_json(
        {
            "schema": SCHEMA_VERSION,
            "identity": report.identity,
            "params": {k: _render(v) for k, v in report.params.items()},
            "lhs": str(report.lhs),
            "middle": None if report.middle is None else str(report.middle),
            "rhs": str(report.rhs),
            "pass": report.passed,
        }
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="probstirling",
        description="Exact probabilistic Stirling tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print an exact value table")
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("--n", type=int, help="row bound (inclusive)")
    table.add_argument("--N", type=int, help="progression length parameter")
    table.add_argument("--m", type=int, help="restrict to one column")
    table.add_argument("--x", type=_rational_arg, help="evaluation point (rational)")
    table.add_argument("--dist", type=parse_distribution, help="distribution syntax")
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.set_defaults(handler=_handle_table)

    verify = sub.add_parser("verify", help="run an identity verification suite")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.add_argument("--dist", type=parse_distribution, help="distribution syntax")
    verify.add_argument("--family", help="Appell family: bernoulli|euler|hermite|moment:<dist>")
    verify.add_argument("--n-max", type=int, dest="n_max")
    verify.add_argument("--N-max", type=int, dest="N_max")
    verify.add_argument("--q", type=_rational_arg, default=Fraction(1, 2))
    verify.add_argument("--lambda", type=_rational_arg, default=Fraction(1), dest="rate")
    verify.add_argument(
        "--x",
        type=_rational_arg,
        action="append",
        help="evaluation point; repeatable (default 0)",
    )
    verify.set_defaults(handler=_handle_verify)

    mc = sub.add_parser("mc-check", help="Monte Carlo cross-check of exact moments")
    mc.add_argument("--dist", type=parse_distribution, required=True)
    mc.add_argument("--k-max", type=int, default=3, dest="k_max")
    mc.add_argument("--n-max", type=int, default=5, dest="n_max")
    mc.add_argument("--samples", type=int, default=1_000_000)
    mc.add_argument("--seed", type=int, default=0)
    mc.add_argument("--z", type=float, default=6.0)
    mc.set_defaults(handler=_handle_mc)

    return parser


def _table_rows(args) -> tuple[tuple[str, ...], list[tuple], dict]:
    kind = args.kind
    if kind == "cnn":
        if args.n is None or args.N is None:
            raise ValueError("cnn table requires --n and --N")
        table = cnn_table(args.n, args.N)
        rows = [(k, v) for k, v in enumerate(table.values)]
        return ("k", "value"), rows, {"n": args.n, "N": args.N}

    if args.n is None:
        raise ValueError(f"{kind} table requires --n")
    if args.m is not None and args.m > args.n:
        raise ValueError(f"--m must not exceed --n, got m={args.m}, n={args.n}")

    if kind in ("stirling2", "stirling1"):
        fn = stirling2 if kind == "stirling2" else stirling1
        rows = []
        for row_n in range(args.n + 1):
            columns = [args.m] if args.m is not None else list(range(row_n + 1))
            rows.extend((row_n, m, fn(row_n, m)) for m in columns if m <= row_n)
        return ("n", "m", "value"), rows, {"n": args.n, "m": args.m}

    if kind == "sy":
        if args.dist is None:
            raise ValueError("sy table requires --dist")
        x = args.x if args.x is not None else Fraction(0)
        rows = []
        for row_n in range(args.n + 1):
            columns = [args.m] if args.m is not None else list(range(row_n + 1))
            rows.extend(
                (row_n, m, sy(args.dist, row_n, m, x)) for m in columns if m <= row_n
            )
        params = {"dist": format_distribution(args.dist), "n": args.n, "m": args.m, "x": x}
        return ("n", "m", "value"), rows, params

    # bell
    x = args.x if args.x is not None else Fraction(1)
    rows = [(row_n, bell_poly(row_n, x)) for row_n in range(args.n + 1)]
    return ("n", "value"), rows, {"n": args.n, "x": x}


def _handle_table(args) -> int:
    fields, rows, params = _table_rows(args)
    if args.format == "csv":
        for row in rows:
            print(",".join(str(_render(v)) for v in row))
    else:
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "table": args.kind,
                "params": {k: _render(v) for k, v in params.items()},
                "rows": [dict(zip(fields, map(_render, row))) for row in rows],
            }
        )
    return 0


def _handle_verify(args) -> int:
    suite = args.suite
    default_n, default_N = _SUITE_DEFAULTS[suite]
    n_max = args.n_max if args.n_max is not None else default_n
    N_max = args.N_max if args.N_max is not None else default_N
    xs = args.x if args.x else [Fraction(0)]

    if suite in ("corollary8", "gf", "paths"):
        if args.dist is None:
            raise ValueError(f"suite {suite!r} requires --dist")
        if suite == "corollary8":
            reports = verify_corollary8(args.dist, n_max, N_max, xs)
        elif suite == "gf":
            reports = verify_gf(args.dist, n_max, xs)
        else:
            reports = verify_paths(args.dist, n_max, xs)
    elif suite == "theorem1":
        reports = verify_theorem1(n_max, N_max, xs)
    elif suite == "theorem9":
        reports = verify_theorem9(n_max, N_max)
    elif suite == "theorem10":
        reports = verify_theorem10(args.rate, n_max, N_max)
    elif suite == "theorem11":
        reports = verify_theorem11(args.q, n_max, N_max)
    elif suite == "theorem12":
        if not args.family:
            raise ValueError("suite 'theorem12' requires --family")
        seed = family_seed(args.family, n_max)
        reports = [
            theorem12_check(seed, n, N, x)
            for n in range(n_max + 1)
            for N in range(n, N_max + 1)
            for x in xs
        ]
    else:  # bernoulli-classic
        reports = verify_bernoulli_classic(n_max, N_max, xs)

    for report in reports:
        _emit_report(report)
    return 0 if all(r.passed for r in reports) else 1


def _handle_mc(args) -> int:
    all_pass = True
    for k in range(args.k_max + 1):
        for n in range(args.n_max + 1):
            estimate = estimate_sum_moment(args.dist, k, n, args.samples, args.seed)
            exact = sum_moment(args.dist, k, n)
            passed = abs(estimate.mean - float(exact)) <= args.z * estimate.stderr
            all_pass = all_pass and passed
            _emit_json(
                {
                    "schema": SCHEMA_VERSION,
                    "check": "mc",
                    "params": {
                        "dist": format_distribution(args.dist),
                        "k": k,
                        "n": n,
                        "samples": args.samples,
                        "seed": args.seed,
                        "z": args.z,
                    },
                    "estimate": estimate.mean,
                    "stderr": estimate.stderr,
                    "exact": str(exact),
                    "pass": passed,
                }
            )
    return 0 if all_pass else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
