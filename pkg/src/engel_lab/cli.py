"""Command-line interface.

Exit codes follow the BSD convention used throughout: 0 when every check
passes (or the query succeeded), 2 when a verification found a
discrepancy, 64 for usage errors (bad flags, malformed expressions, a
lone c-generator where an element of the span is required).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import matching, opgroup, reports
from .core.elements import CMarker, format_elt
from .exprs import ExprError, evaluate, parse
from .ideal.classify import classify
from .ideal.spans import get_context

USAGE_ERROR = 64
DISCREPANCY = 2

CHECK_TOKENS = (
    "prop3.1",
    "lemma3.2",
    "cases",
    "thm4.1",
    "lemma5.1",
    "lemma5.2",
    "prop5.3",
    "engel",
    "prop2.2",
    "thm5.4",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, int(p**0.5) + 1, 2))


def build_parser() -> _Parser:
    top = _Parser(
        prog="engel-lab",
        description="Normal forms, ideal membership and the operator-group checks.",
    )
    top.add_argument(
        "--p", type=int, default=5, help="odd prime modulus (default 5)"
    )
    top.add_argument(
        "--output",
        choices=("text", "json"),
        default="text",
        help="format for the query commands (reports are always JSON)",
    )
    sub = top.add_subparsers(dest="command", required=True)

    q = sub.add_parser("normal-form", help="normal form of a bracket expression")
    q.add_argument("expr")

    q = sub.add_parser("classify", help="shape tag of a single normal word")
    q.add_argument("expr")

    q = sub.add_parser("j-member", help="membership of an expression in the component J")
    q.add_argument("expr")

    q = sub.add_parser("dims", help="per-degree slice/rank/quotient report")
    q.add_argument("--n", type=int, required=True, help="generator window 1..n")

    q = sub.add_parser("verify", help="run one named verification")
    q.add_argument("--check", required=True, choices=CHECK_TOKENS)
    q.add_argument("--m", type=int, default=None)
    q.add_argument("--n", type=int, default=None)
    q.add_argument("--r", type=int, default=None)
    q.add_argument("--samples", type=int, default=None)
    q.add_argument("--seed", type=int, default=opgroup.DEFAULT_SEED)

    q = sub.add_parser("witness", help="matching-space witness certificate")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--mode", choices=("sign", "rowreduce"), default=None)

    return top


def _evaluated(parser: _Parser, src: str):
    try:
        value = evaluate(parse(src))
    except ExprError as exc:
        parser.exit(USAGE_ERROR, f"engel-lab: syntax error: {exc}\n")
    if isinstance(value, CMarker):
        parser.exit(
            USAGE_ERROR,
            "engel-lab: error: the expression is a lone c-generator, "
            "not an element of the span of z\n",
        )
    return value


def _emit(args, payload: dict | list, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _run_verify(args, parser: _Parser) -> dict:
    check = args.check
    p = args.p
    if check == "prop3.1":
        return reports.prop31_report(n=args.n or 4, p=p)
    if check == "lemma3.2":
        return reports.lemma32_report(n=args.n or 7, p=p)
    if check == "cases":
        return reports.cases_report(p=p)
    if check == "thm4.1":
        return reports.thm41_report(p=p)
    if check == "lemma5.1":
        return opgroup.check_lemma51(
            n=args.n or 7, p=p, samples=args.samples or 100, seed=args.seed
        )
    if check == "lemma5.2":
        return opgroup.check_lemma52(
            n=args.n or 7, p=p, samples=args.samples or 100, seed=args.seed
        )
    if check == "prop5.3":
        return opgroup.check_prop53(
            n=args.n or 7, p=p, samples=args.samples or 100, seed=args.seed
        )
    if check == "engel":
        return opgroup.check_engel(
            n=args.n or 7,
            p=p,
            samples=args.samples or 200,
            seed=args.seed,
            r=args.r,
        )
    if check == "prop2.2":
        if args.r is not None:
            return opgroup.check_prop22(args.r, n=args.n, p=p)
        runs = [opgroup.check_prop22(r, p=p) for r in (1, 2, 3, 4)]
        return {
            "check": "prop2.2",
            "p": p,
            "runs": runs,
            "pass": all(r["pass"] for r in runs),
        }
    if check == "thm5.4":
        if args.m is not None:
            return opgroup.check_thm54(args.m, p=p)
        runs = [opgroup.check_thm54(m, p=p) for m in (1, 2, 3)]
        return {
            "check": "thm5.4",
            "p": p,
            "runs": runs,
            "pass": all(r["pass"] for r in runs),
        }
    parser.error(f"unknown check {check!r}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not _is_odd_prime(args.p):
        parser.exit(
            USAGE_ERROR, f"engel-lab: error: p must be an odd prime, got {args.p}\n"
        )

    if args.command == "normal-form":
        value = _evaluated(parser, args.expr)
        text = format_elt(value)
        _emit(args, {"command": "normal-form", "terms": text.splitlines()}, text)
        return 0

    if args.command == "classify":
        value = _evaluated(parser, args.expr)
        terms = list(value.terms)
        if len(terms) != 1:
            parser.exit(
                USAGE_ERROR,
                "engel-lab: error: classify needs an expression whose normal "
                f"form is a single word (got {len(terms)} terms)\n",
            )
        tag = classify(terms[0]).value
        _emit(args, {"command": "classify", "shape": tag}, tag)
        return 0

    if args.command == "j-member":
        value = _evaluated(parser, args.expr)
        verdict = get_context(args.p).contains(value)
        _emit(
            args,
            {"command": "j-member", "member": verdict},
            "true" if verdict else "false",
        )
        return 0

    if args.command == "dims":
        if args.n < 1:
            parser.error("--n must be positive")
        rows = reports.dims_report(args.n, args.p)
        for row in rows:
            print(json.dumps(row))
        return 0 if all(r["pass"] for r in rows) else DISCREPANCY

    if args.command == "verify":
        try:
            report = _run_verify(args, parser)
        except (ValueError, opgroup.ResourceCapError) as exc:
            parser.exit(USAGE_ERROR, f"engel-lab: error: {exc}\n")
        print(json.dumps(report))
        return 0 if report["pass"] else DISCREPANCY

    if args.command == "witness":
        mode = args.mode or ("rowreduce" if args.m <= 3 else "sign")
        if mode == "rowreduce" and args.m > 3:
            parser.error("rowreduce mode is materialized for m <= 3 only")
        if args.m < 1:
            parser.error("--m must be positive")
        report = matching.witness_report(args.m, mode, args.p)
        print(json.dumps(report))
        return 0 if report["pass"] else DISCREPANCY

    parser.error(f"unknown command {args.command!r}")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
