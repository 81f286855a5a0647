"""Built-in invariant suite behind the `selftest` CLI command.

Each check returns (name, ok, detail).  The quick variant trims sizes so the
whole run stays in a few seconds; the full variant is still well under a
minute.  These mirror the package's test suite but run without pytest.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import (
    classify_ball,
    classify_matrix_ball,
    make_symmetric_ball,
    make_symmetric_matrix_ball,
)
from .decomposition import det_identity_check, matrix_ball_decompose
from .euler import euler_apply, euler_bounds, euler_inverse, norm_ratio
from .exprparse import parse_operator, parse_to_operator, print_expr
from .lie import algebra_commutator, basis, basis_operator, bracket_sign, pi_xi, realize, su22, su_n1
from .operators import FirstOrderOperator, symmetry_check
from .oracle import numeric_ip_oracle
from .poly import Polynomial, indices_up_to_degree
from .scalars import cplx
from .spaces import BallSpace, MatrixBallSpace, check_selection_rules

IM = cplx(0, 1)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check(name):
    def wrap(fn):
        fn._check_name = name
        return fn
    return wrap


@_check("ball-norms")
def _ball_norms(quick: bool) -> CheckResult:
    degree = 3 if quick else 6
    for N in (1, 2):
        for xi in (Fraction(0), Fraction(1, 2)):
            space = BallSpace(N, xi)
            for n in indices_up_to_degree(N, degree):
                want = Fraction(1)
                for e in n:
                    for j in range(2, e + 1):
                        want *= j
                for j in range(1, sum(n) + 1):
                    want /= N + xi + j
                got = space.mono_ip(n, n).coefficient
                if got != want:
                    return CheckResult("ball-norms", False, f"N={N} xi={xi} n={n}: {got} != {want}")
    return CheckResult("ball-norms", True)


@_check("matrix-ball-golden")
def _mball_golden(quick: bool) -> CheckResult:
    xis = (Fraction(0),) if quick else (Fraction(0), Fraction(1, 2), Fraction(2))
    for xi in xis:
        space = MatrixBallSpace(xi)
        one = space.norm_one_squared().coefficient
        table = {
            ((1, 0, 0, 0), (1, 0, 0, 0)): 1 / (xi + 4),
            ((2, 0, 0, 0), (2, 0, 0, 0)): 2 / ((xi + 4) * (xi + 5)),
            ((1, 1, 0, 0), (1, 1, 0, 0)): 1 / ((xi + 4) * (xi + 5)),
            ((1, 0, 0, 1), (1, 0, 0, 1)): 1 / ((xi + 3) * (xi + 5)),
            ((1, 0, 0, 1), (0, 1, 1, 0)): -1 / ((xi + 3) * (xi + 4) * (xi + 5)),
        }
        for (n, m), want in table.items():
            got = space.mono_ip(n, m).coefficient / one
            if got != want:
                return CheckResult("matrix-ball-golden", False, f"xi={xi} {n},{m}: {got} != {want}")
    return CheckResult("matrix-ball-golden", True)


@_check("selection-rules")
def _selection(quick: bool) -> CheckResult:
    degree = 2 if quick else 3
    space = MatrixBallSpace(Fraction(1, 2))
    idx = indices_up_to_degree(4, degree)
    for n in idx:
        for m in idx:
            nonzero = not space.mono_ip(n, m).is_zero()
            if nonzero != check_selection_rules(n, m):
                return CheckResult("selection-rules", False, f"{n} vs {m}")
    return CheckResult("selection-rules", True)


@_check("skew-symmetry")
def _skew(quick: bool) -> CheckResult:
    degree = 2 if quick else 3
    xi = Fraction(1, 2)
    for space, algebra in ((BallSpace(2, xi), su_n1(2)), (MatrixBallSpace(xi), su22())):
        idx = indices_up_to_degree(space.dim, degree)
        for tag, _ in basis(algebra):
            op = basis_operator(space, tag)
            for n in idx:
                zn = op.apply(Polynomial.monomial(n))
                for m in idx:
                    lhs = space.ip(zn, Polynomial.monomial(m)).coefficient
                    rhs = space.ip(Polynomial.monomial(n), op.apply(Polynomial.monomial(m))).coefficient
                    if not (lhs + rhs).is_zero():
                        return CheckResult("skew-symmetry", False, f"{tag} on {n},{m}")
    return CheckResult("skew-symmetry", True)


@_check("bracket-sign")
def _bracket(quick: bool) -> CheckResult:
    for space, algebra in ((BallSpace(2, Fraction(1, 2)), su_n1(2)), (MatrixBallSpace(Fraction(1, 2)), su22())):
        s = bracket_sign(algebra)
        els = basis(algebra)
        pairs = range(len(els))
        for a in pairs:
            for b in range(a + 1, len(els)):
                ta, ea = els[a]
                tb, eb = els[b]
                lhs = basis_operator(space, ta).commutator(basis_operator(space, tb))
                rhs = pi_xi(space, algebra_commutator(ea, eb)) * s
                if lhs != rhs:
                    return CheckResult("bracket-sign", False, f"{algebra.label}: [{ta},{tb}]")
    return CheckResult("bracket-sign", True)


@_check("classification-roundtrip")
def _roundtrip(quick: bool) -> CheckResult:
    rng = random.Random(20240901)
    rounds = 3 if quick else 10

    def frac():
        return Fraction(rng.randint(-8, 8), rng.randint(1, 6))

    for xi in (Fraction(0), Fraction(1, 2)):
        sp = BallSpace(2, xi)
        alg = su_n1(2)
        for _ in range(rounds):
            c = frac()
            coeffs = [frac() for _ in range(alg.real_dimension)]
            L = FirstOrderOperator.constant(2, c) + pi_xi(sp, realize(alg, coeffs)) * IM
            res = classify_ball(sp, L)
            if res.c != c or list(res.basis_coefficients.values()) != coeffs:
                return CheckResult("classification-roundtrip", False, f"ball xi={xi}")
        spm = MatrixBallSpace(xi)
        for _ in range(rounds):
            c = frac()
            coeffs = [frac() for _ in range(15)]
            L = FirstOrderOperator.constant(4, c) + pi_xi(spm, realize(su22(), coeffs)) * IM
            res = classify_matrix_ball(spm, L)
            if res.c != c or list(res.basis_coefficients.values()) != coeffs:
                return CheckResult("classification-roundtrip", False, f"mball xi={xi}")
    return CheckResult("classification-roundtrip", True)


@_check("symmetric-templates")
def _templates(quick: bool) -> CheckResult:
    rng = random.Random(77)
    rounds = 2 if quick else 5
    degree = 3 if quick else 4

    def frac():
        return Fraction(rng.randint(-5, 5), rng.randint(1, 4))

    def z():
        return cplx(frac(), frac())

    for _ in range(rounds):
        sp = BallSpace(2, Fraction(1, 2))
        h01 = z()
        L = make_symmetric_ball(sp, frac(), [z(), z()], [[frac(), h01], [h01.conj(), frac()]])
        if not symmetry_check(sp, L, degree).symmetric:
            return CheckResult("symmetric-templates", False, "ball template not symmetric")
        classify_ball(sp, L)
        spm = MatrixBallSpace(Fraction(1, 2))
        d1, d2, d3 = frac(), frac(), frac()
        Lm = make_symmetric_matrix_ball(spm, frac(), [z() for _ in range(4)],
                                        [d1, d2, d3, d2 + d3 - d1], z(), z())
        if not symmetry_check(spm, Lm, degree).symmetric:
            return CheckResult("symmetric-templates", False, "mball template not symmetric")
        classify_matrix_ball(spm, Lm)
    return CheckResult("symmetric-templates", True)


@_check("euler-bounds")
def _euler(quick: bool) -> CheckResult:
    b = euler_bounds(1, 0, 1)
    if not (b.inf_ratio == 1 and b.inf_attained_at == 0 and b.sup_ratio == 6 and b.sup_attained_at is None):
        return CheckResult("euler-bounds", False, f"reference case got {b}")
    scan = 200 if quick else 2000
    for (N, xi, c) in ((1, Fraction(0), Fraction(1)), (2, Fraction(1, 2), Fraction(-1, 2)), (3, Fraction(2), Fraction(3))):
        b = euler_bounds(N, xi, c)
        for k in range(scan):
            r = norm_ratio(N, xi, c, k)
            if not (b.inf_ratio <= r <= b.sup_ratio):
                return CheckResult("euler-bounds", False, f"r({k}) escapes bounds for N={N}")
        p = Polynomial.variable(N, 1) + 3
        if euler_inverse(euler_apply(p, c), c) != p:
            return CheckResult("euler-bounds", False, "inverse roundtrip")
    return CheckResult("euler-bounds", True)


@_check("matrix-ball-decomposition")
def _decomp(quick: bool) -> CheckResult:
    rng = np.random.default_rng(5)
    rounds = 50 if quick else 300
    worst = 0.0
    for _ in range(rounds):
        Z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) * 0.4
        H = np.eye(2) - Z.conj().T @ Z
        if np.any(np.linalg.eigvalsh(H) <= 1e-9):
            continue
        worst = max(worst, det_identity_check(Z))
        dec = matrix_ball_decompose(Z[:, 0])
        if np.linalg.norm(dec.U @ dec.U.conj().T - np.eye(2)) > 1e-12:
            return CheckResult("matrix-ball-decomposition", False, "U not unitary")
        if np.linalg.norm(dec.sqrtT @ dec.sqrtT - dec.T) > 1e-12:
            return CheckResult("matrix-ball-decomposition", False, "sqrtT^2 != T")
    if worst >= 1e-10:
        return CheckResult("matrix-ball-decomposition", False, f"det residual {worst}")
    return CheckResult("matrix-ball-decomposition", True, f"max residual {worst:.2e}")


@_check("oracle")
def _oracle(quick: bool) -> CheckResult:
    samples = 50_000 if quick else 400_000
    sp = BallSpace(1, 0)
    est = numeric_ip_oracle(sp, (1,), (1,), samples, seed=11)
    est2 = numeric_ip_oracle(sp, (1,), (1,), samples, seed=11)
    if est != est2:
        return CheckResult("oracle", False, "not deterministic for a fixed seed")
    if abs(est.estimate - 0.5) > 4 * est.stderr:
        return CheckResult("oracle", False, f"ball estimate {est.estimate} vs 1/2")
    spm = MatrixBallSpace(0)
    estm = numeric_ip_oracle(spm, (0, 0, 0, 0), (0, 0, 0, 0), samples, seed=12)
    exact = float(spm.norm_one_squared().coefficient.as_real()) * float(np.pi) ** 4
    if abs(estm.estimate - exact) > 4 * estm.stderr:
        return CheckResult("oracle", False, f"mball estimate {estm.estimate} vs {exact}")
    return CheckResult("oracle", True)


@_check("expression-parser")
def _parser(quick: bool) -> CheckResult:
    cases = ["z1*d1 + 1", "d1*z1", "1/2*z2^2 - i*d2", "-(z1 + z2)*d1", "(3/4 + 2*i)*z1"]
    for text in cases:
        expr = parse_operator(text, 2)
        printed = print_expr(expr)
        if print_expr(parse_operator(printed, 2)) != printed:
            return CheckResult("expression-parser", False, f"round trip failed for {text!r}")
    weyl = parse_to_operator("d1*z1", 1)
    expected = FirstOrderOperator(1, Polynomial.constant(1, 1), (Polynomial.variable(1, 1),))
    if weyl != expected:
        return CheckResult("expression-parser", False, "d1*z1 did not normalize to z1*d1 + 1")
    try:
        parse_to_operator("d1*d2", 2)
        return CheckResult("expression-parser", False, "d1*d2 accepted")
    except ValueError:
        pass
    return CheckResult("expression-parser", True)


_CHECKS = [
    _ball_norms,
    _mball_golden,
    _selection,
    _skew,
    _bracket,
    _roundtrip,
    _templates,
    _euler,
    _decomp,
    _oracle,
    _parser,
]


def run_selftest(quick: bool = False) -> list[CheckResult]:
    results = []
    for fn in _CHECKS:
        try:
            results.append(fn(quick))
        except Exception as exc:  # a crash counts as a failed invariant
            results.append(CheckResult(fn._check_name, False, f"exception: {exc!r}"))
    return results
