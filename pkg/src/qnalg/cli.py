"""Command-line front end.

Exit codes: 0 for success or ``true``, 1 for ``false`` or a failed suite,
2 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import laurent
from .expr import ExprSyntaxError, element_json, evaluate, print_element
from .laurent import GaussianRational, parse_poly
from .models import apply_nt, apply_qn, equal
from .relations import SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _element(text: str):
    try:
        return evaluate(text)
    except (ExprSyntaxError, ValueError) as exc:
        raise UsageError(f"cannot parse element: {exc}") from exc


def _poly(text: str):
    try:
        return parse_poly(text)
    except SyntaxError as exc:
        raise UsageError(str(exc)) from exc


def format_vector(combo: dict) -> str:
    """``2*e(6) + e(7)`` style text for a combination of basis vectors."""
    pieces = []
    for idx in sorted(combo):
        label = f"e({idx})" if isinstance(idx, int) else f"e({idx[0]},{idx[1]})"
        c: GaussianRational = combo[idx]
        for sign, mag in laurent._scalar_text(c):
            pieces.append((sign, label if mag == "1" else f"{mag}*{label}"))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


def cmd_normalize(args) -> int:
    x = _element(args.expr)
    if args.json:
        print(json.dumps(element_json(x), separators=(",", ":")))
    else:
        print(print_element(x))
    return 0


def cmd_equal(args) -> int:
    result = equal(args.algebra, _element(args.lhs), _element(args.rhs))
    print("true" if result else "false")
    return 0 if result else 1


def cmd_apply(args) -> int:
    x = _element(args.expr)
    try:
        if args.model == "qn":
            vec = apply_qn(x, int(args.vector))
        else:
            j, r = (int(v) for v in args.vector.split(","))
            if r < 1:
                raise ValueError("fibre level must be positive")
            vec = apply_nt(x, j, r)
    except ValueError as exc:
        raise UsageError(f"bad --vector {args.vector!r}: {exc}") from exc
    print(format_vector(vec))
    return 0


def cmd_check(args) -> int:
    report = run_suite(SuiteConfig(args.suite, bound=args.max, seed=args.seed,
                                   exponent_bound=args.exp_max))
    for r in report.failures:
        print(f"FAIL {r.label} (engine={r.engine_ok}, model={r.model_ok})")
    print(report.summary())
    return 0 if report.passed else 1


def cmd_laurent(args) -> int:
    m = args.m
    if m < 1:
        raise UsageError("-m must be a positive integer")
    if args.op == "inner":
        if len(args.polys) != 2:
            raise UsageError("inner takes two polynomials")
        f, g = (_poly(p) for p in args.polys)
        out = laurent.transfer(m, laurent.star(f) * g)
    else:
        if len(args.polys) != 1:
            raise UsageError(f"{args.op} takes one polynomial")
        f = _poly(args.polys[0])
        fn = {"transfer": laurent.transfer, "condexp": laurent.cond_exp,
              "inflate": laurent.inflate}[args.op]
        out = fn(m, f)
    print(laurent.format_poly(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qnalg",
        description="Exact calculator for the Nica-Toeplitz algebra on u, w(m) and its quotient Q_N.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="print the canonical form of an element")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true", help="machine-readable term list")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equal", help="decide equality of two elements")
    p.add_argument("--algebra", choices=["nt", "qn"], required=True)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("apply", help="apply an element to a basis vector of a model")
    p.add_argument("--model", choices=["qn", "nt"], required=True)
    p.add_argument("--vector", required=True, help="k for qn, j,r for nt")
    p.add_argument("expr")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("check", help="run a relation suite")
    p.add_argument("--suite", choices=["toeplitz", "nica", "cuntz", "laca-raeburn"], required=True)
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exp-max", type=int, default=200)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("laurent", help="Laurent polynomial calculus")
    p.add_argument("op", choices=["transfer", "condexp", "inflate", "inner"])
    p.add_argument("-m", type=int, required=True)
    p.add_argument("polys", nargs="+")
    p.set_defaults(func=cmd_laurent)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qnalg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
