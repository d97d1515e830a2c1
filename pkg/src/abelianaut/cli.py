"""Command-line front end.

Subcommands cover the whole library: aut, ratio, classify, valuation,
enumerate, search, atlas, verify.  Output is plain text (default), JSON
lines, or CSV via --format; every number printed is exact, either a
decimal big integer or a reduced a/b.

Exit codes: 0 success; 1 usage or parse error; 2 computational bound
exceeded; 3 formula/oracle mismatch (verify only).
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import core, enumeration, oracle, search
from .arith import FactorizationOverflow, InvalidModulus, primes_up_to
from .core import GroupShape, PGroupShape
from .oracle import BudgetExceeded, OracleBudget
from .search import SearchBounds, Unrealizable, Witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND = 2
EXIT_MISMATCH = 3

_RATIONAL_RE = re.compile(r"\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


class ParseError(ValueError):
    """Bad group or rational syntax; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_group(text: str) -> GroupShape:
    """Parse expressions like ``Z2xZ3xZ9`` into a canonical GroupShape.

    Factors are ``Z<n>`` or ``C<n>`` separated by ``x`` or ``*``;
    whitespace between tokens is ignored and letters are
    case-insensitive.  The result is canonicalized (CRT split, sorted).
    """
    moduli: list[int] = []
    i = 0
    n = len(text)
    while True:
        while i < n and text[i].isspace():
            i += 1
        if i >= n or text[i] not in "zZcC":
            raise ParseError("expected a factor like 'Z12' or 'C12'", i)
        i += 1
        while i < n and text[i].isspace():
            i += 1
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if start == i:
            raise ParseError("expected digits after the factor letter", i)
        moduli.append(int(text[start:i]))
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        if text[i] not in "xX*":
            raise ParseError(f"expected 'x' or '*' between factors, found {text[i]!r}", i)
        i += 1
    return core.canonicalize(moduli)


def parse_ratio_target(text: str) -> Fraction:
    """Parse ``a/b`` or a bare integer; must reduce to a positive value."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ParseError("expected a positive rational like '3' or '3/2'", 0)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError("denominator must be nonzero", text.index("/") + 1)
    value = Fraction(num, den)
    if value <= 0:
        raise ParseError("target ratio must be positive", 0)
    return value


def _emit(
    rows: Iterable[dict],
    columns: tuple[str, ...],
    fmt: str,
    text_of: Callable[[dict], str],
    out=None,
) -> None:
    out = out or sys.stdout
    if fmt == "json":
        for row in rows:
            out.write(json.dumps({c: row[c] for c in columns}) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
    else:
        for row in rows:
            out.write(text_of(row) + "\n")


def _ratio_str(num: int, den: int) -> str:
    return str(num) if den == 1 else f"{num}/{den}"


def cmd_aut(args: argparse.Namespace) -> int:
    shape = parse_group(args.group)
    row = {
        "group": str(shape),
        "order": shape.order,
        "aut_order": core.aut_order(shape),
    }
    _emit([row], ("group", "order", "aut_order"), args.format,
          lambda r: str(r["aut_order"]))
    return EXIT_OK


def cmd_ratio(args: argparse.Namespace) -> int:
    shape = parse_group(args.group)
    r = core.ratio(shape)
    row = {
        "group": str(shape),
        "order": shape.order,
        "aut_order": core.aut_order(shape),
        "ratio_num": r.numerator,
        "ratio_den": r.denominator,
    }
    _emit([row], ("group", "order", "aut_order", "ratio_num", "ratio_den"),
          args.format, lambda r: _ratio_str(r["ratio_num"], r["ratio_den"]))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    shape = parse_group(args.group)
    if not shape.factors:
        print("trivial group: no primary components", file=sys.stderr)
        return EXIT_OK
    rows = [
        {"group": str(shape), "p": f.p, "class": str(core.classify(f))}
        for f in shape.factors
    ]
    _emit(rows, ("group", "p", "class"), args.format,
          lambda r: f"p={r['p']}: {r['class']}")
    return EXIT_OK


def cmd_valuation(args: argparse.Namespace) -> int:
    shape = parse_group(args.group)
    component = shape.component(args.p)
    if component is None:
        print(f"error: {args.p} is not a prime factor of |G| = {shape.order}",
              file=sys.stderr)
        return EXIT_USAGE
    v = core.p_valuation_of_aut(component)
    row = {"group": str(shape), "p": args.p,
           "n": v.n, "d": v.d, "c": v.c, "total": v.total}
    _emit([row], ("group", "p", "n", "d", "c", "total"), args.format,
          lambda r: f"n={r['n']} d={r['d']} c={r['c']} total={r['total']}")
    return EXIT_OK


def _enumerate_rows(max_order: int) -> Iterator[dict]:
    for order, shape in enumeration.groups_up_to(max_order):
        r = core.ratio(shape)
        yield {
            "order": order,
            "group": str(shape),
            "aut_order": core.aut_order(shape),
            "ratio_num": r.numerator,
            "ratio_den": r.denominator,
        }


def cmd_enumerate(args: argparse.Namespace) -> int:
    _emit(
        _enumerate_rows(args.max_order),
        ("order", "group", "aut_order", "ratio_num", "ratio_den"),
        args.format,
        lambda r: (f"{r['order']}\t{r['group']}\t{r['aut_order']}\t"
                   f"{_ratio_str(r['ratio_num'], r['ratio_den'])}"),
    )
    return EXIT_OK


_REASON_TEXT = {
    search.UnrealizableReason.NON_SQUAREFREE_DENOMINATOR:
        "the reduced denominator has a squared prime factor",
    search.UnrealizableReason.ODD_PRIME_TARGET:
        "no odd prime is realizable as a ratio",
}


def cmd_search(args: argparse.Namespace) -> int:
    target = parse_ratio_target(args.target)
    bounds = SearchBounds(max_order=args.max_order, time_limit=args.time_limit)
    verdict = search.realize(target, bounds)
    if isinstance(verdict, Witness):
        r = core.ratio(verdict.group)
        row = {
            "verdict": "witness",
            "group": str(verdict.group),
            "order": verdict.order,
            "ratio_num": r.numerator,
            "ratio_den": r.denominator,
        }
        _emit([row], ("verdict", "group", "order", "ratio_num", "ratio_den"),
              args.format,
              lambda r: (f"witness: {r['group']} (order {r['order']}), "
                         f"ratio {_ratio_str(r['ratio_num'], r['ratio_den'])}"))
    elif isinstance(verdict, Unrealizable):
        row = {"verdict": "unrealizable", "reason": verdict.reason.value}
        _emit([row], ("verdict", "reason"), args.format,
              lambda r: (f"unrealizable ({r['reason']}): "
                         f"{_REASON_TEXT[verdict.reason]}"))
    else:
        row = {"verdict": "not-found-within-bounds",
               "max_order_searched": verdict.max_order_searched}
        _emit([row], ("verdict", "max_order_searched"), args.format,
              lambda r: ("no witness among groups of order <= "
                         f"{r['max_order_searched']} (says nothing beyond)"))
    return EXIT_OK


def cmd_atlas(args: argparse.Namespace) -> int:
    atlas = search.ratio_atlas(SearchBounds(max_order=args.max_order))
    rows = (
        {
            "ratio_num": r.numerator,
            "ratio_den": r.denominator,
            "order": w.order,
            "group": str(w.group),
        }
        for r, w in atlas.items()
    )
    _emit(rows, ("ratio_num", "ratio_den", "order", "group"), args.format,
          lambda r: (f"{_ratio_str(r['ratio_num'], r['ratio_den'])}\t"
                     f"{r['order']}\t{r['group']}"))
    return EXIT_OK


def _pgroup_shapes_up_to(max_order: int) -> Iterator[PGroupShape]:
    """All abelian p-group shapes of order <= max_order, deterministically."""
    for p in primes_up_to(max_order):
        a = 1
        while p**a <= max_order:
            for exps in enumeration.partitions(a):
                yield PGroupShape(p, exps)
            a += 1


def cmd_verify(args: argparse.Namespace) -> int:
    budget = OracleBudget(max_candidate_tuples=args.budget)
    checked = 0
    skipped = 0
    mismatches: list[tuple[PGroupShape, int, int]] = []
    for shape in _pgroup_shapes_up_to(args.max_order):
        if shape.order**shape.rank > budget.max_candidate_tuples:
            skipped += 1
            continue
        expected = core.aut_order_p(shape)
        counted = oracle.count_automorphisms(shape, budget)
        checked += 1
        if expected != counted:
            mismatches.append((shape, expected, counted))
    row = {"checked": checked, "skipped": skipped, "mismatches": len(mismatches)}
    _emit([row], ("checked", "skipped", "mismatches"), args.format,
          lambda r: (f"checked={r['checked']} skipped={r['skipped']} "
                     f"mismatches={r['mismatches']}"))
    for shape, expected, counted in mismatches:
        print(f"MISMATCH {shape}: formula={expected} oracle={counted}",
              file=sys.stderr)
    return EXIT_MISMATCH if mismatches else EXIT_OK


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative_float(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)")

    parser = _Parser(
        prog="abelianaut",
        description="Exact |Aut(G)| and |Aut(G)|/|G| for finite abelian groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("aut", parents=[common],
                       help="print |Aut(G)| for a group expression")
    p.add_argument("group", help="group expression, e.g. Z2xZ3xZ9")
    p.set_defaults(handler=cmd_aut)

    p = sub.add_parser("ratio", parents=[common],
                       help="print |Aut(G)|/|G| as a reduced fraction")
    p.add_argument("group")
    p.set_defaults(handler=cmd_ratio)

    p = sub.add_parser("classify", parents=[common],
                       help="print the shape class of each primary component")
    p.add_argument("group")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser(
        "valuation", parents=[common],
        help="largest power of P dividing |Aut| of the P-primary component")
    p.add_argument("group")
    p.add_argument("-p", type=_positive_int, required=True, metavar="P",
                   help="prime whose primary component to analyze")
    p.set_defaults(handler=cmd_valuation)

    p = sub.add_parser("enumerate", parents=[common],
                       help="stream every abelian group of order 1..N")
    p.add_argument("--max-order", type=_positive_int, required=True, metavar="N")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser(
        "search", parents=[common],
        help="find a group with ratio exactly a/b, or prove there is none")
    p.add_argument("target", help="positive rational: 'a/b' or a bare integer")
    p.add_argument("--max-order", type=_positive_int, default=10**4, metavar="N",
                   help="largest group order to sweep (default: 10000)")
    p.add_argument("--time-limit", type=_nonnegative_float, default=None,
                   metavar="SECONDS", help="optional wall-clock budget")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("atlas", parents=[common],
                       help="map every achieved ratio to its smallest witness")
    p.add_argument("--max-order", type=_positive_int, default=10**4, metavar="N")
    p.set_defaults(handler=cmd_atlas)

    p = sub.add_parser(
        "verify", parents=[common],
        help="cross-check the formula against brute-force counting")
    p.add_argument("--max-order", type=_positive_int, default=64, metavar="N",
                   help="check every p-group shape of order <= N (default: 64)")
    p.add_argument("--budget", type=_positive_int, default=10**6, metavar="B",
                   help="max candidate tuples per shape (default: 1000000)")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidModulus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FactorizationOverflow, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
