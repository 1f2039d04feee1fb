"""Command-line front end.

Subcommands: eval, identity, table, relation, verify.  Exit codes are a
stable contract: 0 success, 2 usage or domain error, 3 numeric failure.
The environment variable ELLIPKINT_TOL overrides the default quadrature
tolerance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .closedform import In_exact_real
from .precision import (
    ConvergenceError,
    DomainError,
    Precision,
    ToleranceNotReached,
)
from .quadrature import IntegralSpec, integral_In_numeric
from .render import render
from .specialvalues import CATALOG, eval_at_special, relation
from .verify import SuiteConfig, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _parse_z(text: str) -> Fraction:
    """z as an exact rational: 'p/q' or a decimal string."""
    try:
        z = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse z value {text!r}") from exc
    if z <= 0:
        raise DomainError(f"z must be positive, got {text}")
    return z


def _precision(args) -> Precision:
    tol = getattr(args, "tol", None)
    if tol is None:
        tol = float(os.environ.get("ELLIPKINT_TOL", "1e-12"))
    return Precision(abs_tol=tol)


def _emit(args, text: str):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _nstr(x, digits: int = 15) -> str:
    import mpmath

    return mpmath.nstr(x, digits)


def cmd_eval(args) -> int:
    prec = _precision(args)
    z = _parse_z(args.z)
    if args.n < 0:
        raise DomainError("n must be nonnegative")
    rows = {}
    if args.method in ("numeric", "both"):
        rows["numeric"] = integral_In_numeric(IntegralSpec(args.n, z), prec).value
    if args.method in ("exact", "both"):
        rows["exact"] = In_exact_real(args.n, z, prec.dps)
    if args.method == "both":
        rows["difference"] = abs(rows["numeric"] - rows["exact"])
    if args.format == "json":
        payload = {"n": args.n, "z": str(z)}
        payload.update({k: _nstr(v, 20) for k, v in rows.items()})
        _emit(args, json.dumps(payload))
    else:
        lines = [f"I_{args.n}({z})"]
        lines += [f"  {k:10s} = {_nstr(v, 20)}" for k, v in rows.items()]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _point(label: str):
    point = CATALOG.get(label)
    if point is None:
        raise DomainError(
            f"unknown special point {label!r}; choose from {sorted(CATALOG)}"
        )
    return point


def _identity_line(n: int, label: str, fmt: str):
    point = _point(label)
    value = eval_at_special(n, point)
    if fmt == "json":
        return {"n": n, "point": label, "value": render(value, "json")}
    body = render(value, fmt)
    if fmt == "latex":
        return f"I_{{{n}}}({_point_z_text(point, fmt)}) = {body}"
    return f"I_{n}({_point_z_text(point, fmt)}) = {body}"


def _point_z_text(point, fmt: str) -> str:
    z = point.z
    if z.b == 0:
        return str(z.a)
    if fmt == "latex":
        return f"{z.a}+{z.b}\\sqrt{{{z.d}}}"
    return f"{z.a}+{z.b}*sqrt({z.d})"


def cmd_identity(args) -> int:
    if args.n < 0:
        raise DomainError("n must be nonnegative")
    line = _identity_line(args.n, args.point, args.format)
    _emit(args, json.dumps(line) if args.format == "json" else line)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_n < 0:
        raise DomainError("max-n must be nonnegative")
    labels = [p.strip() for p in args.points.split(",") if p.strip()]
    if not labels:
        raise DomainError("no special points given")
    for label in labels:
        _point(label)  # validate before emitting anything
    if args.format == "json":
        rows = [
            _identity_line(n, label, "json")
            for label in labels
            for n in range(args.max_n + 1)
        ]
        _emit(args, json.dumps(rows))
    else:
        lines = [
            _identity_line(n, label, args.format)
            for label in labels
            for n in range(args.max_n + 1)
        ]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_relation(args) -> int:
    if args.n < 0 or args.m < 0:
        raise DomainError("n and m must be nonnegative")
    P, Q = relation(args.n, args.m)
    if args.format == "json":
        _emit(args, json.dumps({"n": args.n, "m": args.m, "P": str(P), "Q": str(Q)}))
    else:
        _emit(args, f"P = {P}, Q = {Q}")
    return EXIT_OK


def cmd_verify(args) -> int:
    prec = _precision(args)
    config = SuiteConfig(tol=prec.abs_tol if args.tol else 1e-10, precision=prec)
    result = run_suite(config)
    if args.format == "json":
        _emit(args, json.dumps(result.to_json(), indent=2))
    else:
        _emit(args, result.text())
    return result.exit_status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellipkint",
        description="Evaluate and cross-verify the integral family "
        "I_n(z) = ∫₀¹ K(k)·k/(z+k²)^(n+3/2) dk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("eval", help="evaluate I_n(z) numerically and/or exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", required=True, help="positive real; decimals or 'p/q'")
    p.add_argument("--method", choices=("numeric", "exact", "both"), default="both")
    p.add_argument("--tol", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("identity", help="print the exact identity at a special point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--point", required=True, help="|".join(sorted(CATALOG)))
    common(p, formats=("text", "latex", "json"))
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("table", help="reproduce and extend the exact value tables")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--points", required=True, help="comma-separated point labels")
    common(p, formats=("text", "latex", "json"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("relation", help="rational (P, Q) linking I_n(1) and I_m(1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("verify", help="run the full cross-verification suite")
    p.add_argument("--tol", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ToleranceNotReached, ConvergenceError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
