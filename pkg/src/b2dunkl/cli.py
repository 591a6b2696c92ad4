"""Command-line entry point: ``b2dunkl <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

import numpy as np

from .algebra import Params
from .harmonic import build_basis, norm_prime, valid_indices
from .quad import QuadSpec, estimate_c, fourier_eigen_check
from .verify import SUITES, fourier_cases, run_suite
from .weight import DomainError, WeightParams, default_theta_grid, weight_sample

EXACT_SUITES = ("algebra", "harmonic", "forms", "kernel")


class UsageError(Exception):
    pass


def parse_rational(text: str, allow_decimal: bool) -> Fraction:
    """Parse ``"p/q"`` or an integer; decimals only when ``allow_decimal``."""
    text = text.strip()
    if not allow_decimal and any(ch in text for ch in ".eE"):
        raise UsageError(f"{text!r}: decimals are not accepted here, use p/q")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{text!r} is not a rational number") from None


def _params(args, allow_decimal: bool, need_square: bool) -> Params:
    params = Params(parse_rational(args.k0, allow_decimal), parse_rational(args.k1, allow_decimal))
    if need_square and not params.is_positive_region():
        raise UsageError(f"(k0, k1) = ({params.k0}, {params.k1}) is outside |k0 +/- k1| < 1/2")
    return params


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------


def cmd_basis(args) -> int:
    params = _params(args, allow_decimal=False, need_square=False)
    if args.nmax < 0:
        raise UsageError("--nmax must be nonnegative")
    entries = [e.to_json() for e in build_basis(args.nmax, params)]
    _write(args, json.dumps({"k0": _frac(params.k0), "k1": _frac(params.k1), "basis": entries},
                            indent=1) + "\n")
    return 0


def cmd_norms(args) -> int:
    params = _params(args, allow_decimal=False, need_square=False)
    if args.nmax < 0:
        raise UsageError("--nmax must be nonnegative")
    rows = []
    for e in build_basis(args.nmax, params):
        rows.append({"degree": e.n, "index": e.i, "nu": _frac(e.nu),
                     "nu_prime": _frac(norm_prime(e.n, e.i, params))})
    if args.format == "csv":
        text = "degree,index,nu,nu_prime\n" + "".join(
            f"{r['degree']},{r['index']},{r['nu']},{r['nu_prime']}\n" for r in rows)
    else:
        text = json.dumps(rows, indent=1) + "\n"
    _write(args, text)
    return 0


def cmd_verify(args) -> int:
    exact = args.suite in EXACT_SUITES
    params = _params(args, allow_decimal=not exact,
                     need_square=args.suite in ("weight", "gaussian", "fourier"))
    checks = run_suite(args.suite, params, args.nmax)
    ok = all(c.passed for c in checks)
    report = {"suite": args.suite, "pass": ok, "checks": [c.to_json() for c in checks]}
    _write(args, json.dumps(report, indent=1) + "\n")
    return 0 if ok else 1


def _weight_params(args) -> WeightParams:
    params = _params(args, allow_decimal=True, need_square=True)
    try:
        return WeightParams(float(params.k0), float(params.k1), precision=args.precision)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def cmd_weight_sample(args) -> int:
    wp = _weight_params(args)
    if args.steps <= 0:
        raise UsageError("--steps must be positive")
    table = weight_sample(default_theta_grid(args.steps), wp, conjugate=args.conjugate)
    if args.format == "json":
        rows = [dict(zip(("theta", "k11", "k12", "k22"),
                         (None if np.isnan(v) else float(v) for v in row))) for row in table.rows()]
        text = json.dumps({"view": table.view, "note": table.note, "rows": rows}, indent=1) + "\n"
    else:
        text = table.to_csv()
    _write(args, text)
    return 0


def cmd_estimate_c(args) -> int:
    params = _params(args, allow_decimal=True, need_square=True)
    spec = QuadSpec(angular_tol=args.tol)
    est = estimate_c(params, spec)
    out = {"k0": str(params.k0), "k1": str(params.k1), "estimate": est.estimate,
           "conjecture": est.conjecture, "difference": est.difference}
    _write(args, json.dumps(out, indent=1) + "\n")
    return 0


def cmd_fourier_check(args) -> int:
    params = _params(args, allow_decimal=True, need_square=True)
    spec = QuadSpec(angular_tol=args.tol)
    y = (float(parse_rational(args.y1, True)), float(parse_rational(args.y2, True)))
    if args.m is None:
        cases = fourier_cases()
    else:
        if args.n is None or args.i is None:
            raise UsageError("--m needs --n and --i")
        if args.i not in valid_indices(args.n):
            raise UsageError(f"index {args.i} is not valid in degree {args.n}")
        cases = [(args.m, args.n, args.i)]
    results = []
    for m, n, i in cases:
        r = fourier_eigen_check(m, n, i, y, params, spec, args.laguerre, args.phase)
        results.append({"m": m, "n": n, "i": i,
                        "lhs": [[v.real, v.imag] for v in r.lhs],
                        "rhs": [[v.real, v.imag] for v in r.rhs],
                        "residual": r.residual, "tail": r.tail})
    ok = all(r["residual"] <= 1e-4 for r in results)
    out = {"y": list(y), "laguerre": args.laguerre, "phase": args.phase,
           "pass": ok, "results": results}
    _write(args, json.dumps(out, indent=1) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="b2dunkl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nmax_default=None):
        p.add_argument("--k0", required=True)
        p.add_argument("--k1", required=True)
        p.add_argument("--out", default=None)
        if nmax_default is not False:
            p.add_argument("--nmax", type=int, default=nmax_default)

    p = sub.add_parser("basis", help="harmonic basis as JSON")
    common(p, 4)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("norms", help="exact norms nu and nu'")
    common(p, 10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_norms)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weight-sample", help="K on a theta grid in (0, pi/4)")
    common(p, False)
    p.add_argument("--steps", type=int, default=256)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--precision", choices=("double", "extended"), default="double")
    p.add_argument("--conjugate", action="store_true", help="emit sigma K sigma")
    p.set_defaults(func=cmd_weight_sample)

    p = sub.add_parser("estimate-c", help="numerical normalization constant")
    common(p, False)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_estimate_c)

    p = sub.add_parser("fourier-check", help="Fourier eigenfunction experiment")
    common(p, False)
    p.add_argument("--y1", default="3/5")
    p.add_argument("--y2", default="-4/5")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--laguerre", choices=("full", "half"), default="full")
    p.add_argument("--phase", choices=("n+2m", "m+2n"), default="n+2m")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_fourier_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
