"""Command-line front end: ``aj``, ``verify`` and ``zhu`` subcommands.

Exit codes: 0 when everything passes, 1 when a mathematical check fails,
2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .delta import solve_aj
from .expr import ParseError, parse_tensor, parse_vector
from .report import Report
from .suites import NOTES, SUITES, run
from .tensor import circ_g, star_g
from .zhu import circ, star

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistedzhu", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aj", help="solve for the coefficients a_1..a_N")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--k", type=_positive, nargs="+", help="one or more k (default depends on suite)")
    p.add_argument("--max-weight", type=_nonneg, default=3)
    p.add_argument("--order", type=_nonneg, default=8)
    p.add_argument("--trials", type=_nonneg, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--corrupt-aj", type=_positive, help=argparse.SUPPRESS)

    p = sub.add_parser("zhu", help="evaluate a Zhu product")
    p.add_argument("--op", choices=("star", "circ", "star_g", "circ_g"), required=True)
    p.add_argument("--k", type=_positive, help="tensor power, for star_g and circ_g")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--json", action="store_true")
    return parser


def cmd_aj(args, out) -> int:
    table = solve_aj(args.k, args.order)
    if args.json:
        doc = {"k": args.k, "order": args.order, "a": [str(x) for x in table.a]}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for j, a in enumerate(table.a, start=1):
            out.write(f"a_{j} = {a}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.k and max(args.k) > 8:
        print("warning: k > 8 may take a long time", file=sys.stderr)
    if args.max_weight > 5:
        print("warning: max weight > 5 may take a long time", file=sys.stderr)
    suites = SUITES if args.suite == "all" else (args.suite,)
    config = {
        "suite": args.suite,
        "k": args.k,
        "max_weight": args.max_weight,
        "order": args.order,
        "trials": args.trials,
        "seed": args.seed,
    }
    if args.corrupt_aj:
        config["corrupt_aj"] = args.corrupt_aj
    report = Report(__version__, config, notes=list(NOTES))
    run(report, suites, args.k, args.max_weight, args.order, args.trials, args.seed,
        corrupt=args.corrupt_aj)
    text = report.to_json() if args.json else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_FAIL if report.failed else EXIT_OK


def cmd_zhu(args, out) -> int:
    twisted = args.op.endswith("_g")
    try:
        if twisted:
            u = parse_tensor(args.u, args.k)
            v = parse_tensor(args.v, u.k)
        else:
            u, v = parse_vector(args.u), parse_vector(args.v)
    except ParseError as exc:
        print(f"twistedzhu zhu: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fn = {"star": star, "circ": circ, "star_g": star_g, "circ_g": circ_g}[args.op]
    result = fn(u, v)
    if args.json:
        doc = {"op": args.op, "u": str(u), "v": str(v), "result": str(result)}
        if twisted:
            doc["k"] = u.k
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"{result}\n")
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler = {"aj": cmd_aj, "verify": cmd_verify, "zhu": cmd_zhu}[args.command]
    return handler(args, out)


if __name__ == "__main__":
    sys.exit(main())
