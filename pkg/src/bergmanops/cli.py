"""Command-line front end.

Exit codes: 0 success, 2 parse error (expression syntax, malformed flag
literals), 3 invalid parameters (xi <= -1, inadmissible c, wrong index
length), 4 classification refused (relations violated), 5 internal invariant
failure (selftest).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .classify import ClassificationError, classify
from .euler import euler_apply, euler_bounds, euler_inverse
from .exprparse import OrderError, ParseError, parse_to_operator, parse_to_polynomial
from .lie import (
    AlgebraType,
    algebra_for_space,
    basis_element,
    basis_operator,
    basis_tags,
    bracket_sign,
)
from .operators import symmetry_check
from .oracle import numeric_ip_oracle
from .scalars import format_fraction
from .selftest import run_selftest
from .spaces import BallSpace, MatrixBallSpace, Unit

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PARAMS = 3
EXIT_REFUSED = 4
EXIT_INTERNAL = 5

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational_literal(text: str) -> Fraction:
    """Exact rational flag values; decimals are rejected to preserve exactness."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a rational literal of the form p or p/q"
        )
    return Fraction(text)


def multi_index(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated multi-index")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("multi-index entries must be non-negative")
    return values


def algebra_literal(text: str) -> AlgebraType:
    match = re.match(r"^su\((\d+),([12])\)$", text.strip())
    if not match:
        raise argparse.ArgumentTypeError(f"{text!r} is not su(N,1) or su(2,2)")
    p, q = int(match.group(1)), int(match.group(2))
    try:
        return AlgebraType(p, q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


class ParameterError(ValueError):
    """Semantically invalid parameters (exit code 3)."""


def _make_space(domain: str, N: int | None, xi: Fraction):
    try:
        if domain == "ball":
            if N is None:
                raise ParameterError("--N is required for the ball domain")
            return BallSpace(N, xi)
        if N not in (None, 4):
            raise ParameterError("the matrix ball is fixed at 4 complex variables")
        return MatrixBallSpace(xi)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _add_common(sub, domain=True, xi=True, output=True):
    if domain:
        sub.add_argument("--domain", choices=["ball", "mball"], required=True)
        sub.add_argument("--N", type=int, default=None, help="ball dimension (ball domain only)")
    if xi:
        sub.add_argument("--xi", type=rational_literal, required=True,
                         help="weight parameter as an exact rational p/q")
    if output:
        sub.add_argument("--output", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergmanops",
        description="Exact first-order self-adjoint operator calculus on weighted Bergman spaces",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("innerprod", help="exact monomial inner product")
    _add_common(sp)
    sp.add_argument("--n", type=multi_index, required=True)
    sp.add_argument("--m", type=multi_index, required=True)
    sp.add_argument("--normalized", action="store_true",
                    help="divide by <1,1> (scale-free ratio)")
    sp.set_defaults(handler=cmd_innerprod)

    sp = subs.add_parser("symcheck", help="Gram-pair symmetry test of an operator expression")
    _add_common(sp)
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--op", required=True, help="operator expression, e.g. 'z1*d1 + 1'")
    sp.set_defaults(handler=cmd_symcheck)

    sp = subs.add_parser("classify", help="invert a symmetric operator as c + i*pi_xi(Y)")
    _add_common(sp)
    sp.add_argument("--degree", type=int, default=4, help="verification degree")
    sp.add_argument("--op", required=True)
    sp.set_defaults(handler=cmd_classify)

    sp = subs.add_parser("pi", help="differentiated discrete-series operator of a basis element")
    sp.add_argument("--algebra", type=algebra_literal, required=True,
                    help="su(N,1) or su(2,2)")
    sp.add_argument("--xi", type=rational_literal, required=True)
    sp.add_argument("--element", required=True, help="basis tag: X4:1, X2:1,2, A12, ...")
    sp.add_argument("--output", choices=["text", "json"], default="text")
    sp.set_defaults(handler=cmd_pi)

    sp = subs.add_parser("euler", help="shifted Euler operator: bounds, apply, invert")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--xi", type=rational_literal, required=True)
    sp.add_argument("--c", type=rational_literal, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--bounds", action="store_true")
    group.add_argument("--apply", metavar="POLY")
    group.add_argument("--invert", metavar="POLY")
    sp.add_argument("--output", choices=["text", "json"], default="text")
    sp.set_defaults(handler=cmd_euler)

    sp = subs.add_parser("oracle", help="Monte-Carlo estimate of a monomial inner product")
    _add_common(sp)
    sp.add_argument("--n", type=multi_index, required=True)
    sp.add_argument("--m", type=multi_index, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(handler=cmd_oracle)

    sp = subs.add_parser("selftest", help="run the built-in invariant suites")
    sp.add_argument("--quick", action="store_true")
    sp.add_argument("--output", choices=["text", "json"], default="text")
    sp.set_defaults(handler=cmd_selftest)
    return parser


def _check_index(space, idx):
    if len(idx) != space.dim:
        raise ParameterError(
            f"multi-index {list(idx)} has length {len(idx)}, domain needs {space.dim}"
        )


def cmd_innerprod(args) -> int:
    space = _make_space(args.domain, args.N, args.xi)
    _check_index(space, args.n)
    _check_index(space, args.m)
    value = space.mono_ip(args.n, args.m)
    if args.normalized:
        ratio = value.ratio(space.norm_one_squared())
        payload = {"coefficient": format_fraction(ratio.as_real()), "unit": Unit.ONE.value}
        _emit(args, payload, format_fraction(ratio.as_real()))
    else:
        payload = value.to_json()
        _emit(args, payload, str(value))
    return EXIT_OK


def cmd_symcheck(args) -> int:
    space = _make_space(args.domain, args.N, args.xi)
    L = parse_to_operator(args.op, space.dim)
    if args.degree < 2:
        raise ParameterError("--degree must be at least 2")
    report = symmetry_check(space, L, args.degree)
    lines = [f"{'symmetric' if report.symmetric else 'not symmetric'} (degree {report.degree_checked})"]
    for n, m, lhs, rhs in report.witnesses[:5]:
        lines.append(f"  witness n={list(n)} m={list(m)}: <Lz^n,z^m> = {lhs} but <z^n,Lz^m> = {rhs}")
    if len(report.witnesses) > 5:
        lines.append(f"  ... {len(report.witnesses) - 5} more witnesses")
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    space = _make_space(args.domain, args.N, args.xi)
    L = parse_to_operator(args.op, space.dim)
    if args.degree < 0:
        raise ParameterError("--degree must be non-negative")
    try:
        result = classify(space, L, verified_degree=args.degree)
    except ClassificationError as exc:
        payload = {"symmetric": False, "violations": list(exc.report.violated)}
        text = "not symmetric:\n" + "\n".join(f"  {v}" for v in exc.report.violated)
        _emit(args, payload, text)
        return EXIT_REFUSED
    nonzero = {t: format_fraction(v) for t, v in result.basis_coefficients.items() if v}
    text = (
        f"L = c + i*pi_xi(Y) with c = {format_fraction(result.c)}; "
        f"Y = " + (" + ".join(f"({v})*{t}" for t, v in nonzero.items()) if nonzero else "0")
        + f" (verified exactly to degree {result.verified_degree})"
    )
    _emit(args, result.to_json(), text)
    return EXIT_OK


def cmd_pi(args) -> int:
    algebra = args.algebra
    space = BallSpace(algebra.p, args.xi) if algebra.q == 1 else MatrixBallSpace(args.xi)
    if args.element not in basis_tags(algebra):
        raise ParameterError(
            f"unknown basis element {args.element!r} for {algebra.label}"
        )
    basis_element(algebra, args.element)  # existence check mirrors the tag list
    op = basis_operator(space, args.element)
    payload = {
        "element": args.element,
        "algebra": algebra.label,
        "xi": format_fraction(args.xi),
        "operator": op.to_json(),
        "pretty": str(op),
        "bracket_sign": bracket_sign(algebra),
    }
    _emit(args, payload, f"pi_xi({args.element}) = {op}")
    return EXIT_OK


def cmd_euler(args) -> int:
    if args.N < 1:
        raise ParameterError("--N must be a positive integer")
    if args.xi <= -1:
        raise ParameterError(f"weight parameter must satisfy xi > -1, got {args.xi}")
    if args.c.denominator == 1 and args.c.numerator <= 0:
        raise ParameterError(f"c must not be 0 or a negative integer, got {args.c}")
    if args.bounds:
        bounds = euler_bounds(args.N, args.xi, args.c)
        text = (
            f"inf = {format_fraction(bounds.inf_ratio)}"
            + (f" (attained at k={bounds.inf_attained_at})" if bounds.inf_attained_at is not None else " (limit, not attained)")
            + f", sup = {format_fraction(bounds.sup_ratio)}"
            + (f" (attained at k={bounds.sup_attained_at})" if bounds.sup_attained_at is not None else " (limit, not attained)")
        )
        _emit(args, bounds.to_json(), text)
        return EXIT_OK
    text_expr = args.apply if args.apply is not None else args.invert
    p = parse_to_polynomial(text_expr, args.N)
    out = euler_apply(p, args.c) if args.apply is not None else euler_inverse(p, args.c)
    _emit(args, {"polynomial": out.to_json()}, str(out))
    return EXIT_OK


def cmd_oracle(args) -> int:
    space = _make_space(args.domain, args.N, args.xi)
    _check_index(space, args.n)
    _check_index(space, args.m)
    if args.samples <= 0:
        raise ParameterError("--samples must be positive")
    est = numeric_ip_oracle(space, args.n, args.m, args.samples, args.seed)
    text = (
        f"estimate = {est.estimate.real:.8g} + {est.estimate.imag:.8g}i"
        f" (stderr {est.stderr:.3g}, {est.samples} samples, seed {est.seed})"
    )
    _emit(args, est.to_json(), text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(quick=args.quick)
    passed = all(r.ok for r in results)
    payload = {
        "passed": passed,
        "quick": args.quick,
        "checks": [
            {"name": r.name, "ok": r.ok, **({"detail": r.detail} if r.detail else {})}
            for r in results
        ],
    }
    lines = [
        f"[{'PASS' if r.ok else 'FAIL'}] {r.name}" + (f": {r.detail}" if r.detail else "")
        for r in results
    ]
    lines.append("selftest " + ("passed" if passed else "FAILED"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if passed else EXIT_INTERNAL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, which matches the parse-error code
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ParseError, OrderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
