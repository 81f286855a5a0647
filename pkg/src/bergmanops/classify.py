"""Symmetry relations for first-order operators, and their inversion.

For each domain there is a closed template for the coefficients of a
symmetric operator.  ``check_relations_*`` verifies an operator against the
template relation by relation; ``classify_*`` inverts a conforming operator
into ``c + i * pi_xi(Y)`` with a real constant c and an exact Lie algebra
element Y, verifying the identity on monomials.  ``make_symmetric_*`` builds
operators from the template's free parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lie import (
    LieAlgebraElement,
    algebra_for_space,
    basis_tags,
    pi_xi,
    realize,
)
from .operators import FirstOrderOperator
from .poly import Polynomial, indices_up_to_degree, mi_degree, unit_index, zero_index
from .scalars import ComplexRational, as_fraction, cplx
from .spaces import BallSpace, BergmanSpace, MatrixBallSpace

IMAG = cplx(0, 1)


@dataclass(frozen=True)
class RelationReport:
    satisfied: bool
    violated: tuple[str, ...]

    def to_json(self) -> dict:
        return {"satisfied": self.satisfied, "violated": list(self.violated)}


@dataclass(frozen=True)
class ClassificationResult:
    c: Fraction
    Y: LieAlgebraElement
    basis_coefficients: dict[str, Fraction]
    verified_degree: int

    def to_json(self) -> dict:
        from .scalars import format_fraction

        return {
            "symmetric": True,
            "c": format_fraction(self.c),
            "basis_coefficients": {
                tag: format_fraction(v) for tag, v in self.basis_coefficients.items()
            },
            "Y": self.Y.to_json(),
            "verified_degree": self.verified_degree,
            "violations": [],
        }


class ClassificationError(ValueError):
    """Raised when an operator violates the symmetry relations."""

    def __init__(self, report: RelationReport):
        super().__init__("operator is not symmetric: " + "; ".join(report.violated))
        self.report = report


def _rho(space: BergmanSpace) -> Fraction:
    if isinstance(space, BallSpace):
        return space.N + space.xi + 1
    return space.xi + 4


# ---------------------------------------------------------------------------
# Relation checks
# ---------------------------------------------------------------------------

def check_relations_ball(space: BallSpace, L: FirstOrderOperator) -> RelationReport:
    """Verify the ball template: coefficient degrees, reality, Hermitian
    off-diagonals, and the weighted link between f_0 and the constants of f_k."""
    if not isinstance(space, BallSpace):
        raise TypeError("check_relations_ball needs a ball space")
    if L.dim != space.N:
        raise ValueError("operator dimension does not match the space")
    N = space.N
    rho = _rho(space)
    bad: list[str] = []

    a00 = L.f0.constant_value()
    if not a00.is_real():
        bad.append("a_0^0 real")
    a0 = [L.f[k].constant_value() for k in range(N)]

    allowed_f0 = {zero_index(N)} | {unit_index(N, k) for k in range(1, N + 1)}
    for beta, coeff in L.f0.items():
        if beta not in allowed_f0:
            bad.append(f"f_0 has unexpected monomial z^{list(beta)}")
    for k in range(1, N + 1):
        want = a0[k - 1].conj() * rho
        if L.f0.coefficient(unit_index(N, k)) != want:
            bad.append(f"a_0^{{e_{k}}} = (N+xi+1)*conj(a_{{e_{k}}}^0)")

    h = [[L.f[k].coefficient(unit_index(N, j + 1)) for j in range(N)] for k in range(N)]
    for k in range(N):
        if not h[k][k].is_real():
            bad.append(f"a_{{e_{k + 1}}}^{{e_{k + 1}}} real")
    for j in range(N):
        for k in range(j + 1, N):
            if h[j][k] != h[k][j].conj():
                bad.append(f"a_{{e_{j + 1}}}^{{e_{k + 1}}} = conj(a_{{e_{k + 1}}}^{{e_{j + 1}}})")

    for k in range(N):
        ek = unit_index(N, k + 1)
        allowed = {zero_index(N)}
        allowed |= {unit_index(N, j + 1) for j in range(N)}
        quad = {}
        for j in range(N):
            ej = unit_index(N, j + 1)
            idx = tuple(a + b for a, b in zip(ej, ek))
            quad[idx] = a0[j].conj()
            allowed.add(idx)
        for beta, coeff in L.f[k].items():
            if beta not in allowed:
                bad.append(f"f_{{e_{k + 1}}} has unexpected monomial z^{list(beta)}")
        for idx, want in quad.items():
            if L.f[k].coefficient(idx) != want:
                bad.append(
                    f"quadratic coefficient of f_{{e_{k + 1}}} at z^{list(idx)}"
                    " = conj(a_{e_j}^0)"
                )
    return RelationReport(satisfied=not bad, violated=tuple(bad))


def _partner(i: int) -> int:
    """The index paired with i by the determinant structure (1-based: 5 - i)."""
    return 5 - i


def check_relations_matrix_ball(space: MatrixBallSpace, L: FirstOrderOperator) -> RelationReport:
    """Verify the matrix-ball template, reported against relation rows (1)-(13)."""
    if not isinstance(space, MatrixBallSpace):
        raise TypeError("check_relations_matrix_ball needs a matrix-ball space")
    if L.dim != 4:
        raise ValueError("operator dimension does not match the space")
    rho = _rho(space)
    bad: list[str] = []

    e = [unit_index(4, i) for i in range(1, 5)]
    a00 = L.f0.constant_value()
    if not a00.is_real():
        bad.append("(1) a_0^0 real")
    a0 = [L.f[i].constant_value() for i in range(4)]

    allowed_f0 = {zero_index(4), *e}
    for beta, _ in L.f0.items():
        if beta not in allowed_f0:
            bad.append(f"f_0 has unexpected monomial z^{list(beta)}")
    for i in range(4):
        if L.f0.coefficient(e[i]) != a0[i].conj() * rho:
            bad.append(f"(2) a_0^{{e_{i + 1}}} = (xi+4)*conj(a_{{e_{i + 1}}}^0)")

    # linear coefficients a_{e_i}^{e_j}
    h = [[L.f[i].coefficient(e[j]) for j in range(4)] for i in range(4)]
    for i in range(4):
        if not h[i][i].is_real():
            bad.append(f"(3) a_{{e_{i + 1}}}^{{e_{i + 1}}} real")
    for i in range(4):
        p = _partner(i + 1) - 1
        if not h[i][p].is_zero():
            bad.append(f"(4) a_{{e_{i + 1}}}^{{e_{_partner(i + 1)}}} = 0")
    for i in range(4):
        for j in range(i + 1, 4):
            if h[i][j] != h[j][i].conj():
                bad.append(f"(5) a_{{e_{i + 1}}}^{{e_{j + 1}}} = conj(a_{{e_{j + 1}}}^{{e_{i + 1}}})")
    for i in range(4):
        for j in range(4):
            if j in (i, _partner(i + 1) - 1):
                continue
            if h[i][j] != h[_partner(j + 1) - 1][_partner(i + 1) - 1]:
                bad.append(f"(6) a_{{e_{i + 1}}}^{{e_{j + 1}}} = a_{{e_{_partner(j + 1)}}}^{{e_{_partner(i + 1)}}}")
    if h[0][0].re + h[3][3].re != h[1][1].re + h[2][2].re:
        bad.append("(13) a_{e_1}^{e_1} + a_{e_4}^{e_4} = a_{e_2}^{e_2} + a_{e_3}^{e_3}")

    # quadratic coefficients of each f_{e_i}
    for i in range(4):
        p = _partner(i + 1) - 1
        expected: dict[tuple[int, ...], ComplexRational] = {}
        for j in range(4):
            idx = tuple(a + b for a, b in zip(e[i], e[j]))
            if j == i:
                expected[idx] = a0[i].conj()        # (7)
            elif j == p:
                expected[idx] = cplx(0)              # (9)
            else:
                expected[idx] = a0[j].conj()         # (11)
        jj = [j for j in range(4) if j not in (i, p)]
        cross = tuple(a + b for a, b in zip(e[jj[0]], e[jj[1]]))
        expected[cross] = a0[p].conj()               # (10)
        rule = {
            "same": "(7) a_{e_i}^{2e_i} = conj(a_{e_i}^0)",
            "partner": "(9) a_{e_i}^{e_i+e_{5-i}} = 0",
            "other": "(11) a_{e_i}^{e_i+e_j} = conj(a_{e_j}^0)",
            "cross": "(10) a_{e_i}^{e_j+e_{5-j}} = conj(a_{e_{5-i}}^0)",
        }
        for beta, coeff in L.f[i].items():
            deg = mi_degree(beta)
            if deg == 0 or (deg == 1 and beta in e):
                continue
            if beta not in expected:
                if deg == 2 and beta[p] > 0:
                    bad.append(f"(12) a_{{e_{i + 1}}}^{{e_{_partner(i + 1)}+e_j}} = 0")
                elif deg == 2 and any(b == 2 for b in beta) and beta[i] != 2:
                    bad.append(f"(8) a_{{e_{i + 1}}}^{{2e_j}} = 0")
                else:
                    bad.append(f"f_{{e_{i + 1}}} has unexpected monomial z^{list(beta)}")
        for idx, want in expected.items():
            if L.f[i].coefficient(idx) != want:
                if idx == tuple(a + b for a, b in zip(e[i], e[i])):
                    bad.append(rule["same"] + f" [i={i + 1}]")
                elif idx == tuple(a + b for a, b in zip(e[i], e[p])):
                    bad.append(rule["partner"] + f" [i={i + 1}]")
                elif idx == cross:
                    bad.append(rule["cross"] + f" [i={i + 1}]")
                else:
                    bad.append(rule["other"] + f" [i={i + 1}, z^{list(idx)}]")
    return RelationReport(satisfied=not bad, violated=tuple(bad))


def check_relations(space: BergmanSpace, L: FirstOrderOperator) -> RelationReport:
    if isinstance(space, BallSpace):
        return check_relations_ball(space, L)
    return check_relations_matrix_ball(space, L)


# ---------------------------------------------------------------------------
# Classification (inversion)
# ---------------------------------------------------------------------------

def _verify_identity(space, L, c, Y, degree) -> None:
    reconstructed = FirstOrderOperator.constant(space.dim, c) + pi_xi(space, Y) * IMAG
    if reconstructed == L:
        # structural equality implies the action identity on every monomial
        return
    for n in indices_up_to_degree(space.dim, degree):
        zn = Polynomial.monomial(n)
        if L.apply(zn) != reconstructed.apply(zn):
            raise AssertionError(
                f"classification identity fails on z^{list(n)}; this is a bug"
            )
    raise AssertionError("classification identity fails as operator data; this is a bug")


def classify_ball(space: BallSpace, L: FirstOrderOperator, verified_degree: int = 4) -> ClassificationResult:
    report = check_relations_ball(space, L)
    if not report.satisfied:
        raise ClassificationError(report)
    N = space.N
    a00 = L.f0.constant_value().as_real()
    a0 = [L.f[k].constant_value() for k in range(N)]
    d = [L.f[k].coefficient(unit_index(N, k + 1)).as_real() for k in range(N)]
    S = sum(d, Fraction(0)) / (N + 1)

    coeffs: list[Fraction] = []
    for j in range(N):
        coeffs.append(d[j] - S)                                  # X1:j
    for k in range(2, N + 1):
        for j in range(1, k):
            coeffs.append(L.f[j - 1].coefficient(unit_index(N, k)).imag_part())   # X2:j,k
    for k in range(2, N + 1):
        for j in range(1, k):
            coeffs.append(L.f[j - 1].coefficient(unit_index(N, k)).real_part())   # X3:j,k
    for j in range(N):
        coeffs.append(-a0[j].imag_part())                        # X4:j
    for j in range(N):
        coeffs.append(-a0[j].real_part())                        # X5:j

    algebra = algebra_for_space(space)
    Y = realize(algebra, coeffs)
    c = a00 - _rho(space) * S
    _verify_identity(space, L, c, Y, verified_degree)
    return ClassificationResult(
        c=c,
        Y=Y,
        basis_coefficients=dict(zip(basis_tags(algebra), coeffs)),
        verified_degree=verified_degree,
    )


def classify_matrix_ball(space: MatrixBallSpace, L: FirstOrderOperator, verified_degree: int = 4) -> ClassificationResult:
    report = check_relations_matrix_ball(space, L)
    if not report.satisfied:
        raise ClassificationError(report)
    e = [unit_index(4, i) for i in range(1, 5)]
    a00 = L.f0.constant_value().as_real()
    a0 = [L.f[i].constant_value() for i in range(4)]
    d = [L.f[i].coefficient(e[i]).as_real() for i in range(4)]
    a12 = L.f[0].coefficient(e[1])  # a_{e_1}^{e_2}
    a13 = L.f[0].coefficient(e[2])  # a_{e_1}^{e_3}

    a = [Fraction(0)] * 16  # 1-based working array
    a[1] = -d[0] / 2 - (d[1] - d[2]) / 4
    a[2] = d[0] / 2 - d[1] / 4 - 3 * d[2] / 4
    a[3] = (2 * d[0] - d[1] + d[2]) / 4
    a[4] = a13.imag_part()
    a[5] = a12.imag_part()
    a[6] = -a13.real_part()
    a[7] = a12.real_part()
    a[8] = a0[0].imag_part()
    a[9] = a0[1].imag_part()
    a[10] = a0[2].imag_part()
    a[11] = a0[3].imag_part()
    a[12] = -a0[0].real_part()
    a[13] = -a0[1].real_part()
    a[14] = -a0[2].real_part()
    a[15] = -a0[3].real_part()
    coeffs = a[1:]

    algebra = algebra_for_space(space)
    Y = realize(algebra, coeffs)
    # The constant offset: a_0^0 minus the exact constant term of i*pi(Y).
    # (It works out to a_0^0 + (xi+4)(a_1+a_2), not the flat 3(a_1+a_2).)
    const_of_rep = (pi_xi(space, Y) * IMAG).f0.constant_value().as_real()
    c = a00 - const_of_rep
    _verify_identity(space, L, c, Y, verified_degree)
    return ClassificationResult(
        c=c,
        Y=Y,
        basis_coefficients=dict(zip(basis_tags(algebra), coeffs)),
        verified_degree=verified_degree,
    )


def classify(space: BergmanSpace, L: FirstOrderOperator, verified_degree: int = 4) -> ClassificationResult:
    if isinstance(space, BallSpace):
        return classify_ball(space, L, verified_degree)
    return classify_matrix_ball(space, L, verified_degree)


# ---------------------------------------------------------------------------
# Constructive direction: build operators from the template's free parameters
# ---------------------------------------------------------------------------

def make_symmetric_ball(space: BallSpace, a00, a0, h) -> FirstOrderOperator:
    """Build the symmetric ball template from its free parameters.

    ``a00`` is real, ``a0`` lists the N constants of the derivative
    coefficients, and ``h`` is the N x N Hermitian matrix of their linear
    coefficients.
    """
    N = space.N
    rho = _rho(space)
    a00 = as_fraction(a00)
    a0 = [ComplexRational.coerce(v) for v in a0]
    if len(a0) != N:
        raise ValueError(f"expected {N} constant parameters, got {len(a0)}")
    h = [[ComplexRational.coerce(v) for v in row] for row in h]
    if len(h) != N or any(len(row) != N for row in h):
        raise ValueError(f"expected an {N}x{N} Hermitian parameter matrix")
    for j in range(N):
        if not h[j][j].is_real():
            raise ValueError("diagonal of the parameter matrix must be real")
        for k in range(j + 1, N):
            if h[j][k] != h[k][j].conj():
                raise ValueError("parameter matrix must be Hermitian")

    z = [Polynomial.variable(N, k) for k in range(1, N + 1)]
    f0 = Polynomial.constant(N, a00)
    for j in range(N):
        f0 = f0 + (a0[j].conj() * rho) * z[j]
    f = []
    for k in range(N):
        g = Polynomial.constant(N, a0[k])
        for j in range(N):
            g = g + h[k][j] * z[j] + a0[j].conj() * (z[j] * z[k])
        f.append(g)
    return FirstOrderOperator(N, f0, tuple(f))


def make_symmetric_matrix_ball(space: MatrixBallSpace, a00, a0, diag, a12, a13) -> FirstOrderOperator:
    """Build the symmetric matrix-ball template from its free parameters.

    ``diag`` lists the four real linear diagonal coefficients and must satisfy
    the trace relation d1 + d4 = d2 + d3; ``a12``/``a13`` are the two free
    off-diagonal complex parameters.
    """
    rho = _rho(space)
    a00 = as_fraction(a00)
    a0 = [ComplexRational.coerce(v) for v in a0]
    if len(a0) != 4:
        raise ValueError("expected 4 constant parameters")
    d = [as_fraction(v) for v in diag]
    if len(d) != 4:
        raise ValueError("expected 4 diagonal parameters")
    if d[0] + d[3] != d[1] + d[2]:
        raise ValueError("diagonal parameters must satisfy d1 + d4 = d2 + d3")
    a12 = ComplexRational.coerce(a12)
    a13 = ComplexRational.coerce(a13)

    z1, z2, z3, z4 = (Polynomial.variable(4, k) for k in range(1, 5))
    z = [z1, z2, z3, z4]
    conj0 = [v.conj() for v in a0]

    f0 = Polynomial.constant(4, a00)
    for k in range(4):
        f0 = f0 + (conj0[k] * rho) * z[k]

    def quad(i: int, skip: int) -> Polynomial:
        # sum over k != skip of conj(a_{e_k}^0) z_i z_k  (1-based skip)
        out = Polynomial.zero(4)
        for k in range(4):
            if k == skip - 1:
                continue
            out = out + conj0[k] * (z[i] * z[k])
        return out

    f1 = Polynomial.constant(4, a0[0]) + d[0] * z1 + a12 * z2 + a13 * z3 \
        + conj0[3] * (z2 * z3) + quad(0, skip=4)
    f2 = Polynomial.constant(4, a0[1]) + d[1] * z2 + a12.conj() * z1 + a13 * z4 \
        + conj0[2] * (z1 * z4) + quad(1, skip=3)
    f3 = Polynomial.constant(4, a0[2]) + d[2] * z3 + a12 * z4 + a13.conj() * z1 \
        + conj0[1] * (z1 * z4) + quad(2, skip=2)
    f4 = Polynomial.constant(4, a0[3]) + d[3] * z4 + a12.conj() * z3 + a13.conj() * z2 \
        + conj0[0] * (z2 * z3) + quad(3, skip=1)
    return FirstOrderOperator(4, f0, (f1, f2, f3, f4))
