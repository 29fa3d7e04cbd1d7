"""Command-line front end: ``qschur decompose|hwv|verify|hecke-eval``.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .decompose import BoundExceeded, TheoremViolation, decompose, highest_weight_vector
from .hecke import product, parse_hecke
from .tableaux import parse_tableau
from .verify import run_all

SCHEMA = 1


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qschur", description="Exact quantum super Schur-Weyl computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_k=True):
        p.add_argument("--m", type=_positive, required=True)
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--k", type=_positive, required=need_k)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--bound", type=_positive, default=None,
                       help="largest allowed dim of V^k (default 4096, or $QSCHUR_BOUND)")

    common(sub.add_parser("decompose", help="decompose V^k into H^lambda (x) V(lambda)"))
    hwv = sub.add_parser("hwv", help="highest weight vector for a standard tableau")
    common(hwv, need_k=False)
    hwv.add_argument("--tableau", required=True, help="rows separated by '/', e.g. 1,2/3")
    common(sub.add_parser("verify", help="run every verification suite"))
    ev = sub.add_parser("hecke-eval", help="multiply Hecke algebra expressions")
    ev.add_argument("expr", nargs="+", help="e.g. '(q^2) * T[2,1] + T[1,2]'")
    ev.add_argument("--k", type=_positive, default=None)
    ev.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit(fmt: str, payload: dict, text: str) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, ensure_ascii=False))
    else:
        print(text)


def _cmd_decompose(args) -> int:
    report = decompose(args.m, args.n, args.k, args.bound)
    _emit(args.format, report.to_json(), report.to_text())
    return 0


def _cmd_hwv(args) -> int:
    t = parse_tableau(args.tableau)
    if args.k is not None and args.k != t.k:
        raise ValueError(f"--k {args.k} does not match the tableau size {t.k}")
    cert = highest_weight_vector(t, args.m, args.n)
    text = "\n".join([
        f"T = {t.to_text()}  shape = {t.shape.to_text()}  gl({args.m}|{args.n})",
        f"v+ = {cert.vector.to_text(args.m)}",
        f"weight = {cert.weight.to_text()}",
        "checks: " + ", ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in cert.checks.items()),
    ])
    _emit(args.format, cert.to_json(), text)
    return 0


def _cmd_verify(args) -> int:
    reports = run_all(args.m, args.n, args.k, args.bound)
    ok = all(r.passed for r in reports)
    lines = []
    for r in reports:
        bad = r.failures()
        lines.append(f"{'PASS' if not bad else 'FAIL'}  {r.title}  ({len(r.checks) - len(bad)}/{len(r.checks)})")
        for c in bad:
            lines.append(f"      failed: {c.name} {c.detail}".rstrip())
    lines.append("all suites pass" if ok else "some checks failed")
    payload = {"m": args.m, "n": args.n, "k": args.k, "passed": ok, "reports": [r.to_json() for r in reports]}
    _emit(args.format, payload, "\n".join(lines))
    return 0 if ok else 1


def _cmd_hecke_eval(args) -> int:
    factors = [parse_hecke(e, args.k) for e in args.expr]
    sizes = {f.k for f in factors}
    if len(sizes) != 1:
        raise ValueError(f"factors live in different Hecke algebras: {sorted(sizes)}")
    result = product(factors)
    _emit(args.format, {"k": result.k, "result": result.to_json()}, result.to_text())
    return 0


_COMMANDS = {
    "decompose": _cmd_decompose,
    "hwv": _cmd_hwv,
    "verify": _cmd_verify,
    "hecke-eval": _cmd_hecke_eval,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TheoremViolation as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (BoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
