"""Command-line entry point: ``cliffalg {table,mul,classify,verify,orientation}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import classification, multivector, representations
from .blades import BINARY, GRADE_LEX, TIE_BREAKS, Signature, permutation_orientation

TABLE_CAP = 8
ORIENTATION_CAP = 24

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def dumps(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":")) + "\n"


def _signature(p: int, q: int) -> Signature:
    try:
        return Signature(p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def render_table(p: int, q: int, order: str = GRADE_LEX, fmt: str = "csv") -> str:
    sig = _signature(p, q)
    if sig.n > TABLE_CAP:
        raise UsageError(f"p+q={sig.n} exceeds the table cap of {TABLE_CAP}")
    table = multivector.product_table(sig, order, cap=TABLE_CAP)
    if fmt == "csv":
        return multivector.table_to_csv(table)
    return dumps(multivector.table_to_json(table))


def _load_multivector(path: str) -> multivector.Multivector:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return multivector.from_json(doc)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def render_product(lhs: multivector.Multivector, rhs: multivector.Multivector, p=None, q=None) -> str:
    if p is not None and q is not None and Signature(p, q) != lhs.sig:
        raise UsageError(f"--p/--q ({p},{q}) do not match the input signature {lhs.sig}")
    try:
        z = multivector.geometric_product(lhs, rhs)
    except multivector.AlgebraMismatch as exc:
        raise UsageError(str(exc)) from None
    return dumps(multivector.to_json(z))


def render_classify(p=None, q=None, sweep=None) -> str:
    if sweep is not None:
        if sweep < 1:
            raise UsageError("--sweep needs N >= 1")
        docs = [
            {"p": p_, "q": q_, **d.to_json()} for p_, q_, d in classification.sweep(sweep)
        ]
        return dumps(docs)
    if p is None or q is None:
        raise UsageError("classify needs --p and --q, or --sweep N")
    try:
        return dumps(classification.classify(p, q).to_json())
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def run_verify(names: list[str]) -> tuple[str, bool]:
    reports = []
    for name in names:
        try:
            rep = representations.builtin(name)
        except representations.UnknownRepresentation as exc:
            raise UsageError(exc.args[0]) from None
        reports.append(representations.verify(rep))
    ok = all(r.verdict != representations.FAILURE for r in reports)
    docs = [r.to_json() for r in reports]
    return dumps(docs[0] if len(docs) == 1 else docs), ok


def render_orientation(max_n: int, tie_break: str = "word") -> str:
    if not 1 <= max_n <= ORIENTATION_CAP:
        raise UsageError(f"--max-n must lie in 1..{ORIENTATION_CAP}")
    lines = []
    for n in range(1, max_n + 1):
        sign = permutation_orientation(n, tie_break)
        lines.append(f"{n} {'+1' if sign > 0 else '-1'}\n")
    return "".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffalg", description="Clifford algebra tables, products and checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="signed multiplication table of the basis")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--order", choices=(GRADE_LEX, BINARY), default=GRADE_LEX)
    t.add_argument("--format", choices=("csv", "json"), default="csv")

    m = sub.add_parser("mul", help="geometric product of two multivector documents")
    m.add_argument("--p", type=int)
    m.add_argument("--q", type=int)
    m.add_argument("--lhs", required=True, help="JSON multivector file")
    m.add_argument("--rhs", required=True, help="JSON multivector file")
    m.add_argument("--format", choices=("json",), default="json")

    c = sub.add_parser("classify", help="matrix algebra isomorphic to R^{p,q}")
    c.add_argument("--p", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--sweep", type=int, metavar="N", help="all splits with p+q <= N")

    v = sub.add_parser("verify", help="check a built-in representation")
    group = v.add_mutually_exclusive_group(required=True)
    group.add_argument("--rep", metavar="NAME")
    group.add_argument("--all", action="store_true")

    o = sub.add_parser("orientation", help="sign of the grade-sorting basis permutation")
    o.add_argument("--max-n", type=int, required=True)
    o.add_argument("--tie-break", choices=TIE_BREAKS, default="word")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "table":
            out.write(render_table(args.p, args.q, args.order, args.format))
        elif args.command == "mul":
            lhs = _load_multivector(args.lhs)
            rhs = _load_multivector(args.rhs)
            out.write(render_product(lhs, rhs, args.p, args.q))
        elif args.command == "classify":
            out.write(render_classify(args.p, args.q, args.sweep))
        elif args.command == "verify":
            names = list(representations.BUILTIN_NAMES) if args.all else [args.rep]
            text, ok = run_verify(names)
            out.write(text)
            if not ok:
                return EXIT_VERIFY_FAILED
        elif args.command == "orientation":
            out.write(render_orientation(args.max_n, args.tie_break))
    except UsageError as exc:
        print(f"cliffalg {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
