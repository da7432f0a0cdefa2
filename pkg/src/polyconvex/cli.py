"""Command-line front end.

Exit codes: 0 success (``check``: convex), 1 ``check`` found the polygon
not convex, 2 input or usage error, 3 precondition violated, 4 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from polyconvex.convexity import classify
from polyconvex.errors import InvariantBreach, ParseError, PreconditionViolated
from polyconvex.exact import Line, Point, parse_rational
from polyconvex.harness.bench import ALGORITHMS, bench, to_csv
from polyconvex.harness.checks import check_downward, check_equivalence, check_upward
from polyconvex.harness.corpus import corpus, evaluate
from polyconvex.harness.generators import MODES, GeneratorConfig
from polyconvex.polygon import Polygon, format_polygon, parse_polygon, reduce, sub_polygon
from polyconvex.structure import (
    count_strict_convex_orderings,
    cut,
    strict_convex_ordering,
)

EXIT_OK, EXIT_NOT_CONVEX, EXIT_INPUT, EXIT_PRECONDITION, EXIT_BUG = 0, 1, 2, 3, 4


def _read_polygon(path: str) -> Polygon:
    if path == "-":
        return parse_polygon(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_polygon(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_check(args) -> int:
    report = classify(_read_polygon(args.file))
    if args.json:
        _emit(report.to_json())
    else:
        for key, value in report.to_json().items():
            if key != "witness":
                print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
        if report.witness is not None:
            print(f"witness: {json.dumps(report.witness.to_json())}")
    return EXIT_OK if report.convex else EXIT_NOT_CONVEX


def cmd_cut(args) -> int:
    poly = _read_polygon(args.file)
    try:
        x0, y0, x1, y1 = (parse_rational(t) for t in args.line)
        line = Line(Point(x0, y0), Point(x1, y1))
    except ValueError as exc:
        raise ParseError(f"bad --line: {exc}") from None
    result = cut(poly, line, allow_nonstrict=args.allow_nonstrict)
    if args.json:
        _emit(result.to_json())
    else:
        print(f"i: {result.i}")
        print(f"j: {result.j}")
        print(f"p: {result.p}")
        print(f"q: {result.q}")
        print(f"plus_convex: {str(result.plus_convex).lower()}")
        print(f"minus_convex: {str(result.minus_convex).lower()}")
        print("plus:")
        sys.stdout.write(format_polygon(result.plus))
        print("minus:")
        sys.stdout.write(format_polygon(result.minus))
    return EXIT_OK


def cmd_order(args) -> int:
    result = strict_convex_ordering(_read_polygon(args.file).vertices)
    sys.stdout.write(format_polygon(result.polygon))
    return EXIT_OK


def cmd_perms(args) -> int:
    res = count_strict_convex_orderings(_read_polygon(args.file).vertices)
    _emit({
        "n": res.n,
        "total": res.total,
        "strictly_convex": res.count,
        "expected": 2 * res.n,
        "matches_dihedral": res.matches_dihedral,
    })
    return EXIT_OK if res.matches_dihedral and res.count == 2 * res.n else EXIT_BUG


def cmd_reduce(args) -> int:
    sys.stdout.write(format_polygon(reduce(_read_polygon(args.file), args.alpha)))
    return EXIT_OK


def cmd_sub(args) -> int:
    sys.stdout.write(format_polygon(sub_polygon(_read_polygon(args.file), args.indices)))
    return EXIT_OK


def cmd_corpus(args) -> int:
    status = EXIT_OK
    for c in corpus():
        if not args.run:
            print(f"{c.name}\t{len(c.polygon)} vertices\t{c.notes}")
            continue
        actual = evaluate(c)
        ok = actual == c.expected
        if not ok:
            status = EXIT_BUG
        print(f"{'PASS' if ok else 'FAIL'} {c.name}")
        if not ok:
            print(f"  expected {c.expected}\n  actual   {actual}")
    return status


def cmd_fuzz(args) -> int:
    config = GeneratorConfig(args.mode, args.n, grid_max=args.grid, seed=args.seed, count=args.budget)
    checks = {"downward": check_downward, "upward": check_upward, "equivalence": check_equivalence}
    names = list(checks) if args.check == "all" else [args.check]
    status = EXIT_OK
    for name in names:
        report = checks[name](config)
        for line in report.json_lines():
            print(line)
        if not report.ok:
            status = EXIT_BUG
    return status


def cmd_bench(args) -> int:
    rows = bench(args.algo, args.n_list, seed=args.seed, memoize=not args.no_memo)
    sys.stdout.write(to_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyconvex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="classify a polygon")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cut", help="cut a convex polygon along a line")
    p.add_argument("file")
    p.add_argument("--line", nargs=4, required=True, metavar=("X0", "Y0", "X1", "Y1"))
    p.add_argument("--allow-nonstrict", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("order", help="strictly convex ordering of a point set")
    p.add_argument("file")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("perms", help="count strictly convex orderings by brute force")
    p.add_argument("file")
    p.set_defaults(func=cmd_perms)

    p = sub.add_parser("reduce", help="delete one vertex")
    p.add_argument("file")
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("sub", help="extract a sub-polygon")
    p.add_argument("file")
    p.add_argument("--indices", type=_int_list, required=True)
    p.set_defaults(func=cmd_sub)

    p = sub.add_parser("corpus", help="list or verify the worked examples")
    p.add_argument("--run", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("fuzz", help="run property checks over generated polygons")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--check", choices=("downward", "upward", "equivalence", "all"), default="all")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("bench", help="count predicate calls per n")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), required=True)
    p.add_argument("--n-list", type=_int_list, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-memo", action="store_true", help="disable memoization of the incremental test")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionViolated as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvariantBreach, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
