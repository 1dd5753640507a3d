"""Command line interface: ``qwalk classify | enumerate | eliminants | check-tables``."""
from __future__ import annotations

import argparse
import json
import sys

from .elim import eliminant_c, eliminant_rho
from .enumeration import count_excursions
from .errors import (
    CapExceeded,
    HalfPlaneConfined,
    InvalidStep,
    ParseError,
    PrecisionExhausted,
    QwalkError,
)
from .irrational import HYPOTHESIS_FAILED
from .numsolve import DEFAULT_PRECISION, precision_cap
from .report import check_tables, classify
from .stepset import parse_stepset

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_HYPOTHESIS = 2
EXIT_INCONCLUSIVE = 3
EXIT_INPUT = 4


class _InputError(Exception):
    pass


def _steps(text):
    try:
        return parse_stepset(text)
    except (ParseError, InvalidStep) as exc:
        raise _InputError(str(exc)) from exc


def _precision(bits):
    if bits < 16:
        raise _InputError("precision must be at least 16 bits")
    if bits > precision_cap():
        raise _InputError(f"precision {bits} exceeds the cap of {precision_cap()} bits (QWALK_PRECISION_CAP)")
    return bits


def _cmd_classify(args):
    s = _steps(args.steps)
    report = classify(s, max_n=args.max_n, bits=_precision(args.precision), fit_n=args.fit)
    print(report.to_json() if args.format == "json" else report.to_text())
    if report.conclusion == HYPOTHESIS_FAILED:
        return EXIT_HYPOTHESIS
    if report.verdict["inconclusive"]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_enumerate(args):
    s = _steps(args.steps)
    mode = "float" if args.float else "exact"
    seq = count_excursions(s, args.max_n, mode=mode)
    terms = list(seq.terms)
    if args.format == "json":
        out = {"steps": str(s), "mode": mode, "terms": terms}
        if mode == "float":
            out["scale"] = seq.scale
            out["note"] = "terms are e_n / scale^n in double precision"
        print(json.dumps(out, sort_keys=True))
    else:
        for t in terms:
            print(repr(t) if mode == "float" else t)
    return EXIT_OK


def _cmd_eliminants(args):
    s = _steps(args.steps)
    E = eliminant_rho(s) if args.target == "rho" else eliminant_c(s)
    if args.format == "json":
        print(json.dumps({"target": args.target, "poly": E.poly.format("t"),
                          "degree": E.poly.degree, "provenance": E.provenance}, sort_keys=True, default=str))
    else:
        print(E.poly.format("t"))
    return EXIT_OK


def _cmd_check_tables(args):
    try:
        result = check_tables(args.table, args.tags or None, bits=_precision(args.precision))
    except KeyError as exc:
        raise _InputError(str(exc.args[0])) from exc
    if args.format == "json":
        rows = [{"tag": r.tag, "passed": r.passed, "details": r.details} for r in result.rows]
        print(json.dumps({"table": result.table, "passed": result.passed, "total": result.total, "rows": rows},
                         sort_keys=True, indent=2))
    else:
        for r in result.rows:
            print(f"{r.tag:>4}  {'pass' if r.passed else 'FAIL'}")
        print(result.summary())
    return EXIT_OK if result.ok else EXIT_FAILED


def build_parser():
    p = argparse.ArgumentParser(prog="qwalk", description="Quarter-plane excursion classification.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(q, steps=True):
        if steps:
            q.add_argument("--steps", required=True, help='step set, e.g. "(-1,0),(0,1),(1,-1)"')
        q.add_argument("--format", choices=("json", "text"), default="text")

    q = sub.add_parser("classify", help="run the full pipeline on a step set")
    common(q)
    q.add_argument("--max-n", type=int, default=12, help="number of exact excursion counts to report")
    q.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="working precision in bits")
    q.add_argument("--fit", type=int, default=None, metavar="N",
                   help="also fit e_n ~ K rho^n n^alpha on float counts up to N (non-certified)")
    q.set_defaults(func=_cmd_classify)

    q = sub.add_parser("enumerate", help="count excursions")
    common(q)
    q.add_argument("--max-n", type=int, required=True)
    g = q.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", default=True)
    g.add_argument("--float", action="store_true")
    q.set_defaults(func=_cmd_enumerate)

    q = sub.add_parser("eliminants", help="print the squarefree eliminant of rho or c")
    common(q)
    q.add_argument("--target", choices=("rho", "c"), required=True)
    q.set_defaults(func=_cmd_eliminants)

    q = sub.add_parser("check-tables", help="regression check of the reference tables")
    common(q, steps=False)
    q.add_argument("--table", type=int, choices=(1, 2), default=1)
    q.add_argument("--tags", nargs="*", help='tags such as 23 "(40,42)" 7*')
    q.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    q.set_defaults(func=_cmd_check_tables)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (_InputError, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HalfPlaneConfined as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except QwalkError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
