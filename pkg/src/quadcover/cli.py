"""Command line: ``quadcover {cohomology,table,verify}``.

Exit codes: 0 when everything passes, 1 on a verification failure, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .covers import ALL_TYPES
from .divisors import cohomology, parse_divisor, parse_surface
from .tables import FORMATS, KINDS, all_pass, build_table, emit
from .verify import SUITES, VerifyConfig, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quadcover",
        description="Exact invariants, bicanonical maps and canonical rings of quadruple Galois canonical covers.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", help="h0, h1, h2 and chi of a line bundle")
    c.add_argument("--surface", required=True, help="P2 or F:e, e.g. F:2")
    c.add_argument("--divisor", required=True, help="d on P2, a,b for a*C0+b*f on F_e")
    c.add_argument("--format", choices=("text", "json"), default="text")

    t = sub.add_parser("table", help="recompute a table and compare with the expected values")
    t.add_argument("kind", choices=KINDS)
    t.add_argument("--type", dest="types", action="append", choices=ALL_TYPES, metavar="TYPE",
                   help="restrict to a type (repeatable)")
    t.add_argument("--m-max", type=_positive, default=12)
    t.add_argument("--n-max", type=_positive, default=5)
    t.add_argument("--format", choices=FORMATS, default="text")

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--m-max", type=_positive, default=8)
    v.add_argument("--n-max", type=_positive, default=5)
    v.add_argument("--only", action="append", metavar="SUITE",
                   help=f"run only these suites (repeatable or comma separated): {', '.join(SUITES)}")
    v.add_argument("--oracle", action="store_true", help="cross-check ranks with dense exact elimination")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--show", type=int, default=5, help="failure messages to print per suite")
    return p


def cmd_cohomology(args) -> int:
    try:
        S = parse_surface(args.surface)
        D = parse_divisor(args.divisor, S)
    except ValueError as exc:
        raise UsageError(str(exc))
    co = cohomology(D, S)
    if args.format == "json":
        print(json.dumps({"surface": str(S), "divisor": str(D), "h0": co.h0, "h1": co.h1, "h2": co.h2, "chi": co.chi}))
    else:
        print(f"{D} on {S}: h0 = {co.h0}, h1 = {co.h1}, h2 = {co.h2}, chi = {co.chi}")
    return EXIT_OK


def cmd_table(args) -> int:
    types = tuple(args.types) if args.types else ALL_TYPES
    rows = build_table(args.kind, types, m_max=args.m_max, n_max=args.n_max)
    config = {"kind": args.kind, "types": list(types), "m_max": args.m_max, "n_max": args.n_max}
    sys.stdout.write(emit(args.kind, rows, args.format, config))
    return EXIT_OK if all_pass(rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [s.strip() for chunk in args.only for s in chunk.split(",") if s.strip()]
    cfg = VerifyConfig(m_max=args.m_max, n_max=args.n_max, oracle=args.oracle)
    try:
        results = run(cfg, only)
    except ValueError as exc:
        raise UsageError(str(exc))
    ok = all(r.passed for r in results)
    if args.format == "json":
        doc = {
            "command": "verify",
            "config": {"m_max": cfg.m_max, "n_max": cfg.n_max, "oracle": cfg.oracle, "only": only},
            "rows": [{"suite": r.name, "checked": r.checked, "failures": r.failures, "pass": r.passed} for r in results],
            "pass": ok,
        }
        print(json.dumps(doc, indent=2))
    else:
        for r in results:
            print(r.summary())
            for msg in r.failures[: args.show]:
                print(f"      {msg}")
        total = sum(r.checked for r in results)
        bad = sum(len(r.failures) for r in results)
        print(f"{'PASS' if ok else 'FAIL'}  {len(results)} suites, {total} checks, {bad} failures")
    return EXIT_OK if ok else EXIT_FAIL


_COMMANDS = {"cohomology": cmd_cohomology, "table": cmd_table, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"quadcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
