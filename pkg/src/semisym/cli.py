"""Command line interface: ``semisym compute|verify|table|order|apply``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .combinatorics import (bracket, componentwise_le, contained, dominated, parse_parts,
                            partition, preceq, preceq_hom, sqsubseteq)
from .diffops import operators
from .exactalg import MultiPoly, NonGenericParameter
from .identities import closed_forms, evaluation, suites
from .interpolation import build_R, build_r, elementary_semisym
from .interpolation.basis import BASES, build_Rbar, to_basis

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def excluded_r(value: Fraction, n: int) -> bool:
    """Negative rationals, including every -p/(2q) with p >= 1 and 1 <= q < n/2."""
    if value < 0:
        return True
    q = 1
    while 2 * q < n:
        p = -value * 2 * q
        if p.denominator == 1 and p >= 1:
            return True
        q += 1
    return False


def parse_r(text: str | None, n: int) -> Fraction | None:
    """None for symbolic r, else a rational value outside the excluded set."""
    if text is None or text == "sym":
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--r expects 'sym' or a rational p/q, got {text!r}")
    if excluded_r(value, n):
        raise UsageError(f"r = {value} lies in the excluded set of negative rationals")
    return value


def read_partition(text: str | None, n: int, flag: str = "--lambda") -> tuple:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return partition(parse_parts(text), n)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}")


def _specialized_terms(items, value: Fraction, key: str) -> list[dict]:
    out = []
    for k, c in items:
        v = c.specialize(value)
        if v:
            out.append({key: list(k), "value": str(v)})
    return out


def poly_payload(f: MultiPoly, r_value) -> dict:
    if r_value is None:
        return f.to_json()
    return {"n": f.n, "r": str(r_value), "terms": _specialized_terms(f.items(), r_value, "exp")}


def expansion_payload(f: MultiPoly, basis: str, r_value) -> dict:
    if basis == "monomial":
        return poly_payload(f, r_value)
    expansion = to_basis(f, basis)
    if r_value is None:
        return expansion.to_json()
    items = [(k, expansion[k]) for k in expansion.support()]
    return {"basis": basis, "n": f.n, "r": str(r_value),
            "terms": _specialized_terms(items, r_value, "index")}


def cmd_compute(args) -> int:
    n = args.n
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    r_value = parse_r(args.r, n)
    if args.what == "value":
        return _emit(args, _value_payload(args, n, r_value))
    if args.what == "e":
        if args.m is None or not 0 <= args.m <= n:
            raise UsageError(f"--m must lie in 0..{n}")
        f = elementary_semisym(args.m, n, shifted=args.shifted)
        label = f"R_(1^{args.m})" if args.shifted else f"e_{args.m}"
    else:
        lam = read_partition(args.lam, n)
        builder = {"R": build_R, "r": build_r, "Rbar": build_Rbar}[args.what]
        f = builder(lam, n)
        label = f"{args.what}_{lam}"
    basis = args.basis
    if basis == "json":
        basis = "monomial"
    if basis == "rbar" and args.what != "Rbar":
        raise UsageError("the rbar basis only applies to homogeneous input (compute Rbar)")
    payload = expansion_payload(f, basis, r_value)
    if args.format == "text":
        return _emit(args, f"{label} = {f}\n")
    return _emit(args, dumps(payload))


def parse_alpha(text: str) -> Fraction:
    try:
        alpha = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--alpha expects a rational number, got {text!r}")
    if alpha <= 0:
        raise UsageError("--alpha must be positive")
    return alpha


def _value_payload(args, n: int, r_value) -> str:
    lam = read_partition(args.lam, n)
    alpha = parse_alpha(args.alpha)
    closed = evaluation.special_value(lam, n, alpha)
    direct = evaluation.special_value_direct(lam, n, alpha)
    if r_value is None:
        value = closed.to_json()
    else:
        value = str(closed.specialize(r_value))
    return dumps({"n": n, "lambda": list(lam), "alpha": str(alpha), "value": value,
                  "agrees_with_direct": closed == direct})


def _emit(args, text: str) -> int:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = {"n": args.n, "dmax": args.dmax}
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    try:
        suites.suite_names(args.suite)
    except ValueError as exc:
        raise UsageError(str(exc))
    report = suites.run(args.suite, params, jobs=args.jobs)
    if args.report == "json":
        _emit(args, dumps(report))
    else:
        lines = []
        for s in report["suites"]:
            tag = " (report only)" if s["report_only"] else ""
            lines.append(f"{s['name']}: {s['passed']} passed, {s['failed']} failed{tag}")
            for case in s["cases"]:
                if not case["passed"]:
                    lines.append(f"  FAIL {case['case']}: {case['witness'][0]}")
        lines.append("OK" if report["ok"] else "FAILED")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_table(args) -> int:
    if args.deg < 1:
        raise UsageError("--deg must be positive")
    rows = closed_forms.table_relations(args.deg)
    mismatches = []
    if args.deg == 3:
        golden = closed_forms.load_golden()
        derived = {tuple(r["lambda"]): closed_forms.golden_terms(r) for r in rows}
        expected = {tuple(r["lambda"]): closed_forms.golden_terms(r) for r in golden}
        for lam in sorted(set(derived) | set(expected)):
            if derived.get(lam) != expected.get(lam):
                mismatches.append(list(lam))
    if args.format == "json":
        text = dumps({"deg": args.deg, "rows": rows, "golden_checked": args.deg == 3,
                      "mismatches": mismatches})
    else:
        lines = [closed_forms.format_relation(r) for r in rows]
        if args.deg == 3:
            lines.append("golden file: " + ("match" if not mismatches else f"differs at {mismatches}"))
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_FAIL if mismatches else EXIT_OK


def cmd_order(args) -> int:
    n = args.n or max(len(parse_parts(args.lam or "")), len(parse_parts(args.mu or "")), 1)
    lam = read_partition(args.lam, n)
    mu = read_partition(args.mu, n, "--mu")
    payload = {
        "n": n, "mu": list(mu), "lambda": list(lam),
        "bracket_mu": list(bracket(mu)), "bracket_lambda": list(bracket(lam)),
        "dominated": dominated(mu, lam),
        "componentwise": componentwise_le(mu, lam),
        "contained": contained(mu, lam),
        "sqsubseteq": sqsubseteq(mu, lam),
        "preceq": preceq(mu, lam),
        "preceq_homogeneous": preceq_hom(mu, lam),
    }
    return _emit(args, dumps(payload))


def cmd_apply(args) -> int:
    n = args.n
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    if n > operators.MAX_EXPANSION_N:
        raise UsageError(f"operators are expanded only for n <= {operators.MAX_EXPANSION_N}")
    lam = read_partition(args.lam, n)
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--t expects a rational number, got {args.t!r}")
    r_value = parse_r(args.r, n)
    R = build_R(lam, n)
    image = operators.apply(args.op, R, t)
    eig = operators.eigenvalue(args.op, lam, t)
    ok = image == R.scale(eig)
    payload = {"op": args.op, "t": str(t), "n": n, "lambda": list(lam),
               "eigenvalue": eig.to_json() if r_value is None else str(eig.specialize(r_value)),
               "verdict": "pass" if ok else "fail", "result": poly_payload(image, r_value)}
    _emit(args, dumps(payload))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semisym",
                                     description="Semisymmetric interpolation polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_required=False):
        p.add_argument("--n", type=int, required=n_required)
        p.add_argument("--out")

    p = sub.add_parser("compute", help="build R_lam, r_lam, Rbar_lam, e_m or R_lam(-rho-alpha)")
    p.add_argument("what", choices=["R", "r", "Rbar", "e", "value"])
    common(p)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--m", type=int)
    p.add_argument("--shifted", action="store_true")
    p.add_argument("--alpha", default="1")
    p.add_argument("--basis", default="monomial", choices=list(BASES) + ["json"])
    p.add_argument("--r", default="sym")
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite")
    common(p)
    p.add_argument("--dmax", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="relations expressing R_lam through column polynomials")
    p.add_argument("--deg", type=int, default=3)
    p.add_argument("--format", default="text", choices=["json", "text"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("order", help="compare two partitions in every order")
    common(p)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("apply", help="apply X(t) or Y(t) to R_lam")
    common(p, n_required=True)
    p.add_argument("--op", choices=list(operators.KINDS), required=True)
    p.add_argument("--t", default="0")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--r", default="sym")
    p.set_defaults(func=cmd_apply)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonGenericParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
