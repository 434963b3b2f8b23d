"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import JOIN_ASCII, JOIN_UTF8, doppel_name, recognize
from .classify import classify, verify_all
from .core import CayleyTable, DoppelTable, EncodingError, is_associative, parse_table
from .iso import are_isomorphic, automorphisms, canonical
from .report import FORMATS
from .search import (
    BudgetExceeded, SearchBudget, enumerate_associative, interassociates_of,
    semigroup_classes, strong_interassociates_of,
)

DEFAULT_MAX_ORDER = 3
HARD_MAX_ORDER = 5


class UsageError(Exception):
    pass


def _budget(args, n: int) -> SearchBudget:
    if n > HARD_MAX_ORDER:
        raise UsageError(f"order {n} is beyond the supported maximum {HARD_MAX_ORDER}")
    if n > DEFAULT_MAX_ORDER and args.budget_nodes is None:
        raise UsageError(f"order {n} > {DEFAULT_MAX_ORDER} needs an explicit --budget-nodes")
    return SearchBudget(max(n, DEFAULT_MAX_ORDER), args.budget_nodes)


def _inputs(args) -> list:
    texts = list(args.table or [])
    if args.stdin:
        texts += [line.strip() for line in sys.stdin if line.strip()]
    if not texts:
        raise UsageError("no input table: pass --table or --stdin")
    return [parse_table(t) for t in texts]


def _semigroup(x, what="input") -> CayleyTable:
    if not isinstance(x, CayleyTable):
        raise UsageError(f"{what} must be a semigroup encoding (S:...)")
    if not is_associative(x):
        raise UsageError(f"{what} {x.encode()} is not associative")
    return x


def _with_right(args, x):
    if args.right is None:
        return x
    return DoppelTable(_semigroup(x, "--table"), _semigroup(parse_table(args.right), "--right"))


def _name(s: str, args) -> str:
    return s.replace(JOIN_UTF8, JOIN_ASCII).replace("×", "x") if args.ascii else s


def cmd_enum_semigroups(args, out):
    budget = _budget(args, args.n)
    if args.canonical:
        for cf in semigroup_classes(args.n, budget):
            out.write(cf.canon.encode() + "\n")
    else:
        for t in enumerate_associative(args.n, budget):
            out.write(t.encode() + "\n")
    return 0


def cmd_interassociates(args, out):
    for x in _inputs(args):
        t = _semigroup(x)
        budget = SearchBudget(max(t.n, DEFAULT_MAX_ORDER), args.budget_nodes)
        found = (strong_interassociates_of if args.strong else interassociates_of)(t, budget)
        if args.canonical:
            found = sorted({canonical(b).canon for b in found})
        for b in found:
            out.write(b.encode() + "\n")
    return 0


def cmd_aut(args, out):
    for x in _inputs(args):
        aut = automorphisms(_with_right(args, x))
        if args.format == "json":
            out.write(json.dumps({"label": _name(aut.label, args), "order": aut.order,
                                  "elements": [list(p.image) for p in aut.elements]}) + "\n")
        else:
            out.write(_name(str(aut), args) + "\n")
    return 0


def cmd_iso(args, out):
    items = _inputs(args)
    if len(items) != 2:
        raise UsageError(f"iso needs exactly two tables, got {len(items)}")
    out.write(("true" if are_isomorphic(*items) else "false") + "\n")
    return 0


def cmd_recognize(args, out):
    for x in _inputs(args):
        x = _with_right(args, x)
        if isinstance(x, DoppelTable):
            out.write(doppel_name(x, ascii=args.ascii) + "\n")
        else:
            name = recognize(x)
            out.write((str(name) if name else "unnamed") + "\n")
    return 0


def cmd_classify(args, out):
    report = classify(args.n, _budget(args, args.n), args.workers)
    out.write(FORMATS[args.format](report, ascii=args.ascii))
    return 0


def cmd_verify(args, out):
    budget = _budget(args, args.max_n)
    results = verify_all(args.max_n, budget, args.workers)
    for r in results:
        out.write(_name(r.line(), args) + "\n")
        if r.counterexample:
            out.write(f"  counterexample: {r.counterexample}\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doppel", description="Enumerate and classify small semigroups and doppelsemigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, table=False, n=False, fmt=None):
        p.add_argument("--budget-nodes", type=int, default=None,
                       help="node limit for backtracking; required for orders above 3")
        p.add_argument("--ascii", action="store_true", help="render >< instead of the join symbol")
        if table:
            p.add_argument("--table", action="append", help="table encoding S:<n>:... or D:<n>:...:...")
            p.add_argument("--stdin", action="store_true", help="read one encoding per line")
        if n:
            p.add_argument("--n", type=int, required=True)
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("enum-semigroups", help="list associative tables of order n")
    common(p, n=True)
    p.add_argument("--canonical", action="store_true", help="one canonical table per class")
    p.set_defaults(func=cmd_enum_semigroups)

    p = sub.add_parser("interassociates", help="list interassociates of a semigroup")
    common(p, table=True)
    p.add_argument("--strong", action="store_true", help="only strong interassociates")
    p.add_argument("--canonical", action="store_true", help="one canonical table per class")
    p.set_defaults(func=cmd_interassociates)

    p = sub.add_parser("aut", help="automorphism group of a (doppel)semigroup")
    common(p, table=True, fmt=["text", "json"])
    p.add_argument("--right", help="second operation; makes --table the first one")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="test two tables for isomorphism")
    common(p, table=True)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("recognize", help="name a table from the catalog")
    common(p, table=True)
    p.add_argument("--right", help="second operation; makes --table the first one")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("classify", help="classify doppelsemigroups of order n")
    common(p, n=True, fmt=["text", "json", "csv", "md"])
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run all verifiers up to an order")
    common(p)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
            raise UsageError("--n must be positive")
        if getattr(args, "max_n", 1) < 1:
            raise UsageError("--max-n must be positive")
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be positive")
        return args.func(args, out)
    except EncodingError as exc:
        print(f"doppel: malformed encoding: {exc}", file=sys.stderr)
        return 2
    except (UsageError, BudgetExceeded, ValueError) as exc:
        print(f"doppel: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
