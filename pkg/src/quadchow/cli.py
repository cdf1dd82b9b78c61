"""Command line front end for the verification harness.

Subcommands run one family of checks each; ``sweep`` runs everything.  A
single tuple is selected with --n/--m/--j, ranges with --n-range/--j-range
(inclusive, written A..B).  The exit code is 0 exactly when every report
passed.

For ``wu`` the --n flag is the quadric dimension and --j the operation
degree (stored as both m and j in the report parameters).  For ``chern``
--n is the quadric dimension; with no flags it runs the power-of-two-minus-
one dimensions 1, 3, 7, 15, 31.  ``coeffsum`` checks the whole admissible
k-family for the given tuple.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import arith, checks
from .checks import SweepConfig
from .quadric import subquadric_dim
from .report import Report, render_json, render_markdown, sort_reports


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("range must look like A..B, got %r" % text)
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range %r" % text)
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadchow",
        description="verify Chow-ring congruences for split quadrics",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in (
        "thm1",
        "lemma13",
        "wu",
        "prop21",
        "lemma22",
        "thm24",
        "coeffsum",
        "chern",
        "sweep",
    ):
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--j", type=int, default=None)
        p.add_argument("--n-range", type=_parse_range, default=None)
        p.add_argument("--j-range", type=_parse_range, default=None)
        p.add_argument("--format", choices=("json", "markdown"), default="markdown")
        p.add_argument("--out", default=None)
        p.add_argument(
            "--mutation-test",
            action="store_true",
            help="flip one binomial parity; at least one check must then fail",
        )
    return parser


def _thm1_family(args, check_fn) -> list[Report]:
    if args.n_range is None and args.j_range is None and args.n is not None:
        if args.m is None or args.j is None:
            raise SystemExit("need --m and --j (or ranges) for this check")
        return [check_fn(args.n, args.m, args.j)]
    n_lo, n_hi = args.n_range or (args.n or 1, args.n or 24)
    j_range = args.j_range or ((args.j, args.j) if args.j is not None else None)
    m_max = args.m if args.m is not None else 20
    return [
        check_fn(n, m, j)
        for n, m, j in checks.thm1_tuples(n_lo, n_hi, m_max, j_range)
    ]


def _prop2_family(args, check_fn) -> list[Report]:
    if args.n_range is None and args.j_range is None and args.n is not None:
        return [check_fn(args.n, args.j if args.j is not None else 0)]
    n_lo, n_hi = args.n_range or (args.n or 1, args.n or 24)
    j_lo, j_hi = args.j_range or ((args.j, args.j) if args.j is not None else (0, 8))
    return [
        check_fn(n, j) for n, j in checks.prop2_tuples(n_lo, n_hi, j_lo, j_hi)
    ]


def _run_command(args) -> list[Report]:
    cmd = args.command
    if cmd == "thm1":
        return _thm1_family(args, checks.check_thm1)
    if cmd == "lemma13":
        return _thm1_family(args, checks.check_lemma13)
    if cmd == "prop21":
        return _prop2_family(args, checks.check_prop21)
    if cmd == "lemma22":
        return _prop2_family(args, checks.check_lemma22)
    if cmd == "thm24":
        return _prop2_family(args, checks.check_thm24)
    if cmd == "wu":
        d_lo, d_hi = args.n_range or (args.n or 1, args.n or 7)
        r_lo, r_hi = args.j_range or ((args.j, args.j) if args.j is not None else (0, 10))
        return [
            checks.check_wu(d, r)
            for d in range(max(d_lo, 1), d_hi + 1)
            for r in range(max(r_lo, 0), r_hi + 1)
        ]
    if cmd == "chern":
        if args.n_range is not None:
            dims = range(max(args.n_range[0], 1), args.n_range[1] + 1)
        elif args.n is not None:
            dims = [args.n]
        else:
            dims = (1, 3, 7, 15, 31)
        return [checks.check_chern(d) for d in dims]
    if cmd == "coeffsum":
        if args.n is None:
            raise SystemExit("coeffsum needs --n (and optionally --m, --j)")
        n = args.n
        m = args.m if args.m is not None else 20
        j = args.j if args.j is not None else 0
        d = subquadric_dim(n)[1]
        k_hi = (m - j) // 2
        return [checks.check_coeffsum(k, d, m, j, n=n) for k in range(k_hi + 1)]
    if cmd == "sweep":
        config = SweepConfig(mutation=args.mutation_test)
        if args.n_range is not None:
            config = replace(config, n_lo=args.n_range[0], n_hi=args.n_range[1])
        if args.j_range is not None:
            config = replace(config, j_lo=args.j_range[0], j_hi=args.j_range[1])
        if args.m is not None:
            config = replace(config, m_max=args.m)
        return checks.run_sweep(config)
    raise SystemExit("unknown command %r" % cmd)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    arith.set_mutation(args.mutation_test)
    try:
        reports = sort_reports(_run_command(args))
    finally:
        arith.set_mutation(False)
    text = render_json(reports) if args.format == "json" else render_markdown(reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    failed = [r for r in reports if not r.passed]
    if args.format == "markdown" and args.out:
        print("%d checks, %d failed" % (len(reports), len(failed)))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
