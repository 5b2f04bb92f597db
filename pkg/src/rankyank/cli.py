"""Command-line entry point.

Exit codes: ``analyze`` returns 0 when nobody is whipped and 1 otherwise;
``check`` returns 0 when a sufficient condition holds and 3 otherwise;
``enumerate`` returns 0 when no implication is violated and 1 otherwise.
Input errors return 2 everywhere.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .exceptions import RankYankError
from .fileformat import load_profile
from .oracle import (
    RNG_ALGORITHM,
    Culture,
    EnumerationScope,
    SimulationConfig,
    estimate_none_whipped_probability,
    exhaustive_none_whipped_frequency,
    verify_implications,
)
from .prefmaps import format_rational
from .report import analyze, condition_report_dict, render_pretty

EXIT_OK = 0
EXIT_SEPARABLE = 1
EXIT_INPUT = 2
EXIT_NO_CONDITION = 3


def _dump(doc) -> str:
    return json.dumps(doc, indent=2)


def cmd_analyze(args) -> int:
    agg = analyze(load_profile(args.file))
    if args.pretty:
        sys.stdout.write(render_pretty(agg))
    else:
        print(_dump(agg.to_dict()))
    return EXIT_OK if agg.verdict.none_whipped else EXIT_SEPARABLE


def cmd_check(args) -> int:
    agg = analyze(load_profile(args.file))
    print(_dump(condition_report_dict(agg.conditions, agg)))
    return EXIT_OK if agg.conditions.any_sufficient else EXIT_NO_CONDITION


def cmd_enumerate(args) -> int:
    scope = EnumerationScope(args.m, args.n)
    pool = None
    if args.pool:
        profile = load_profile(args.pool)
        pool = list(dict.fromkeys(profile.orders))
    report = verify_implications(scope, pool=pool)
    print(_dump(report.to_dict()))
    return EXIT_OK if report.ok else EXIT_SEPARABLE


def cmd_simulate(args) -> int:
    config = SimulationConfig(args.m, args.n, args.trials, args.seed, Culture(args.culture))
    est = estimate_none_whipped_probability(config)
    doc = {
        "m": config.m,
        "n": config.n,
        "culture": config.culture.value,
        "seed": config.seed,
        "rng": RNG_ALGORITHM,
        **est.to_dict(),
    }
    if args.exhaustive:
        doc["exhaustive"] = format_rational(exhaustive_none_whipped_frequency(config.m, config.n, config.culture))
    print(_dump(doc))
    if args.csv:
        fields = ["m", "n", "culture", "seed", "trials", "hits", "point", "standard_error"]
        new = not os.path.exists(args.csv) or os.path.getsize(args.csv) == 0
        with open(args.csv, "a", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields, extrasaction="ignore")
            if new:
                writer.writeheader()
            writer.writerow(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankyank",
        description="Majority aggregation of multi-criteria rankings and forced-ranking verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a profile file")
    p.add_argument("file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--pretty", action="store_true", help="human-readable report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="sufficient-condition flags and witnesses")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="exhaustively verify the implications on small profiles")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pool", help="profile file whose distinct rankings replace the full set of weak orders")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("simulate", help="Monte Carlo estimate of the none-whipped probability")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--culture", choices=[c.value for c in Culture], default=Culture.UNIFORM_WEAK_ORDERS.value)
    p.add_argument("--exhaustive", action="store_true", help="also report the exact enumerated frequency")
    p.add_argument("--csv", help="append the estimate as a row to this CSV file")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RankYankError, OSError) as exc:
        print(f"rankyank: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
