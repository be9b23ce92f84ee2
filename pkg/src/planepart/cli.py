"""Command-line interface: ``planepart enumerate | genfun | verify``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import closedform as cf
from .exactq import ZERO
from .genfun import F_brute, G_brute, G_recursion, S_function
from .kernel import BACKEND
from .patterns import PatternError, gt_enumerate, spp_enumerate
from .verify import SUITES, default_jobs, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ENUM_HELP = """\
CSV columns:
  spp: rows,norm,odd_rows,count_n   (rows as 'a b c/d e', top row first)
  gt:  rows,inversions,sign,norm    (full rows with boundaries, top row first)
json emits one object per line; text emits one readable line per object."""


def _rows_cell(rows) -> str:
    return "/".join(" ".join(str(x) for x in row) for row in rows)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_enumerate(args, out) -> int:
    if args.kind == "spp":
        if args.n is None or args.c is None:
            return _usage(args, "spp needs --n and --c")
        if args.n < 0 or args.c < 0:
            return _usage(args, "--n and --c must be non-negative")
        items = ((s.to_json_obj(args.n), s.rows) for s in spp_enumerate(args.n, args.c))
        columns = ["rows", "norm", "odd_rows", "count_n"]
    else:
        if None in (args.r, args.n, args.c):
            return _usage(args, "gt needs --r, --n and --c")
        top = args.top if args.top is not None else []
        if not (0 <= args.r <= args.n) or len(top) != args.n - args.r:
            return _usage(args, "need 0 <= r <= n and n - r entries in --top")
        items = ((g.to_json_obj(), g.display_rows()) for g in gt_enumerate(args.r, args.n, args.c, top))
        columns = ["rows", "inversions", "sign", "norm"]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for obj, rows in items:
            w.writerow([_rows_cell(rows)] + [obj[k] for k in columns[1:]])
    elif args.format == "json":
        for obj, _ in items:
            out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        for obj, rows in items:
            stats = " ".join(f"{k}={obj[k]}" for k in columns[1:])
            out.write(f"{_rows_cell(rows) or '(empty)'}  {stats}\n")
    return EXIT_OK


def cmd_genfun(args, out) -> int:
    n, c, p, k = args.n, args.c, args.p, args.k
    if n < 1:
        return _usage(args, "--n must be at least 1")
    if c < 0 and k is None:
        return _usage(args, "--c must be non-negative")
    if k is not None and abs(k) > c + 3 * n:
        print(f"warning: |k| > c + 3n; enumeration cost grows quickly", file=sys.stderr)
    if k is None:
        if args.source == "brute":
            value = G_brute(n, c, p)
        elif args.source == "closed":
            value = cf.G_closed(n, c, p)
        else:
            value = ZERO
            A = S_function(n, p)
            for kk in range(c + 1):
                value = value + G_recursion(n - 1, n, c, A, [kk]).mul_q(kk)
    else:
        if args.source == "brute":
            value = F_brute(n, c, p, k)
        elif args.source == "closed":
            value = cf.F_closed(n, c, p).eval(k)
        else:
            value = G_recursion(n - 1, n, c, S_function(n, p), [k])
        if args.times_qk:
            value = value.mul_q(k)
    if args.format == "json":
        out.write(value.to_json() + "\n")
    elif args.format == "canonical":
        out.write(value.to_text() + "\n")
    else:
        out.write(value.to_pretty() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_n < 1:
        return _usage(args, "--max-n must be at least 1")
    if args.max_c < 0:
        return _usage(args, "--max-c must be non-negative")
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        return _usage(args, "--jobs must be positive")
    report = run_suite(args.suite, args.max_n, args.max_c, jobs, args.fast_filter)
    text = report.to_json(timings=args.timings) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    s = report.summary()
    print(f"{args.suite}: {s['passed']}/{s['total']} passed", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _usage(args, message: str) -> int:
    args._parser.print_usage(sys.stderr)
    print(f"{args._parser.prog}: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planepart",
        description="Enumerate strict plane partitions and patterns, and check their generating functions exactly.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 (kernel: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("enumerate", help="dump objects with statistics", epilog=ENUM_HELP,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    pe.add_argument("kind", choices=["spp", "gt"])
    pe.add_argument("--n", type=int)
    pe.add_argument("--c", type=int)
    pe.add_argument("--r", type=int)
    pe.add_argument("--top", type=_int_list, help="top-row interior, comma separated")
    pe.add_argument("--format", choices=["json", "csv", "text"], default="text")
    pe.set_defaults(func=cmd_enumerate, _parser=pe)

    pg = sub.add_parser("genfun", help="print a generating function",
                        description="With --k: F(k) normalized by q**-k. Without --k: the count G over all k.")
    pg.add_argument("--source", choices=["brute", "closed", "recursion"], default="closed")
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--c", type=int, required=True)
    pg.add_argument("--p", type=int, required=True)
    pg.add_argument("--k", type=int)
    pg.add_argument("--times-qk", action="store_true", help="multiply F(k) by q**k")
    pg.add_argument("--format", choices=["text", "canonical", "json"], default="text")
    pg.set_defaults(func=cmd_genfun, _parser=pg)

    pv = sub.add_parser("verify", help="run identity checks and emit a JSON report")
    pv.add_argument("--suite", choices=["all", *SUITES], default="all")
    pv.add_argument("--max-n", type=int, default=3)
    pv.add_argument("--max-c", type=int, default=4)
    pv.add_argument("--jobs", type=int, help="worker processes (default: $PLANEPART_JOBS or 1)")
    ff = pv.add_mutually_exclusive_group()
    ff.add_argument("--fast-filter", dest="fast_filter", action="store_true", default=None,
                    help="reject on random rational substitutions before the exact check")
    ff.add_argument("--no-fast-filter", dest="fast_filter", action="store_false")
    pv.add_argument("--timings", action="store_true", help="include elapsed_ms per instance")
    pv.add_argument("--out", help="write the report here instead of stdout")
    pv.set_defaults(func=cmd_verify, _parser=pv)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (PatternError, ValueError) as exc:
        return _usage(args, str(exc))
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
