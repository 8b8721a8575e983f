"""Command line entry point.

    schurq expand --ribbon 2,1
    schurq eq --a 3 --b 1,1,1
    schurq classes --n 4 [--out classes.json] [--format csv]
    schurq verify --suite all --max 8
    schurq conjecture --n 11 [--jobs 4]

Exit status: 0 on success, 1 when an identity fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import lab
from .combinat import compositions_of, format_composition, parse_composition
from .diagram import skew_shapes
from .omega import (
    RELATIONS,
    equal,
    euler_form,
    format_expansion,
    relation_check,
    ribbon_mult_check,
    ribbon_q,
    skew_q,
)
from .oracle import amenable_q_poly, omega_to_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _composition(text: str):
    try:
        alpha = parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not alpha:
        raise argparse.ArgumentTypeError("empty composition")
    return alpha


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schurq", description="Exact ribbon Schur Q-function computations.")
    p.add_argument("--config", help="key=value file with max_n, variable_count, "
                   "worker_count, output_path, format")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("expand", help="q-basis expansion of a ribbon")
    s.add_argument("--ribbon", type=_composition, required=True)

    s = sub.add_parser("eq", help="decide whether two ribbons have equal functions")
    s.add_argument("--a", type=_composition, required=True)
    s.add_argument("--b", type=_composition, required=True)
    s.add_argument("--k-max", type=int, default=None)

    s = sub.add_parser("classes", help="equality classes of all ribbons of size n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--format", choices=("json", "csv"))
    s.add_argument("--jobs", type=int)

    s = sub.add_parser("verify", help="run an identity suite")
    s.add_argument("--suite", choices=("relations", "theorems", "oracle", "all"), default="all")
    s.add_argument("--max", type=int, default=None)

    s = sub.add_parser("conjecture", help="compare move closure with equality classes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int)
    s.add_argument("--out")
    s.add_argument("--format", choices=("json", "csv"))
    return p


def _verify_relations(max_n: int) -> list[str]:
    failures = []
    for m in range(1, max_n // 2 + 1):
        if euler_form(2 * m):
            failures.append(f"euler form chi_{2 * m} does not vanish")
    for total in range(2, max_n + 1):
        for na in range(1, total):
            for a in compositions_of(na):
                for b in compositions_of(total - na):
                    if not ribbon_mult_check(a, b):
                        failures.append(f"ribbon multiplication fails on {a}, {b}")
    for kind in RELATIONS:
        for x in range(1, max_n // 2 + 1):
            if not relation_check(kind, x):
                failures.append(f"relation {kind} fails at x={x}")
    return failures


def _verify_oracle(max_n: int) -> list[str]:
    failures = []
    for n in range(1, min(max_n, 6) + 1):
        for d in skew_shapes(n):
            if omega_to_poly(skew_q(d), n) != amenable_q_poly(d, n):
                failures.append(f"tableau oracle disagrees on {d}")
    return failures


def _run_verify(suite: str, max_n: int) -> int:
    failures: list[str] = []
    if suite in ("relations", "all"):
        failures += _verify_relations(max_n)
        print(f"relations (max {max_n}): {'FAIL' if failures else 'ok'}")
    if suite in ("oracle", "all"):
        found = _verify_oracle(max_n)
        failures += found
        print(f"oracle (max {min(max_n, 6)}): {'FAIL' if found else 'ok'}")
    if suite in ("theorems", "all"):
        try:
            tally = lab.theorem_suite(max(max_n, 2))
            print("theorems: ok " + " ".join(f"{k}={v}" for k, v in tally.items()))
        except lab.IdentityFailure as exc:
            failures.append(str(exc))
            print("theorems: FAIL")
    for f in failures:
        print(f, file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = lab.RunConfig.from_file(args.config) if args.config else lab.RunConfig()
    except (OSError, ValueError, TypeError) as exc:
        print(f"schurq: bad config: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.command == "expand":
        print(format_expansion(ribbon_q(args.ribbon)))
        return EXIT_OK

    if args.command == "eq":
        if sum(args.a) != sum(args.b):
            print("not equal (different sizes)")
            return EXIT_OK
        w = lab.inequality_witness(args.a, args.b, args.k_max or config.variable_count)
        print("equal" if w.status == "equal" else
              ("not equal" if w.k is None else f"not equal (differs at k={w.k})")
              if w.status == "differs" else "inconclusive")
        return EXIT_OK

    if args.command in ("classes", "conjecture"):
        if args.n < 1:
            print("schurq: --n must be positive", file=sys.stderr)
            return EXIT_USAGE
        jobs = args.jobs or config.worker_count
        run = lab.RunConfig(max_n=args.n, variable_count=config.variable_count, worker_count=jobs,
                            output_path=args.out or config.output_path,
                            format=args.format or config.format)
        if args.command == "classes":
            report = lab.classes(args.n, jobs)
            print(f"n={args.n}: {len(report.classes)} classes")
            print(lab.describe_classes(report))
            for key, value in report.notes.items():
                print(f"note: {key}: {value}")
            if run.output_path:
                lab.export_report(report, run)
            return EXIT_OK
        try:
            report = lab.conjecture_check(args.n, jobs)
        except lab.SoundnessError as exc:
            print(f"soundness failure: {exc}", file=sys.stderr)
            return EXIT_FAIL
        v = report.verdict
        print(f"n={args.n}: {len(report.classes)} equality classes, "
              f"{len(report.closure_classes)} closure classes: {'match' if v.match else 'mismatch'}")
        for a, b in v.equal_not_connected:
            print(f"equal but not connected: {format_composition(a)} ~ {format_composition(b)}")
        if run.output_path:
            lab.export_report(report, run)
        return EXIT_OK

    if args.command == "verify":
        return _run_verify(args.suite, args.max or min(config.max_n, 8))

    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
