"""su(N,1) and su(2,2) as exact matrix Lie algebras and their operator images.

Elements are square matrices of ``ComplexRational`` satisfying
``X* J + J X = 0`` and ``tr X = 0`` with ``J = diag(I_p, -I_q)``.  The map to
first-order differential operators is defined on the explicit bases below and
extended by real-linearity; it lands in skew-symmetric operators on the
matching Bergman space.

The operator tables realize the bracket only up to a global sign (a matter of
convention in how the group action is differentiated); :func:`bracket_sign`
pins that sign empirically from one designated pair and exports it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .operators import FirstOrderOperator
from .poly import Polynomial
from .scalars import ComplexRational, as_fraction, cplx, format_fraction
from .spaces import BallSpace, BergmanSpace, MatrixBallSpace

Matrix = tuple[tuple[ComplexRational, ...], ...]


@dataclass(frozen=True)
class AlgebraType:
    """Either su(N,1) (ball) or su(2,2) (matrix ball)."""

    p: int
    q: int

    def __post_init__(self):
        if not ((self.q == 1 and self.p >= 1) or (self.p, self.q) == (2, 2)):
            raise ValueError("supported algebras are su(N,1) and su(2,2)")

    @property
    def size(self) -> int:
        return self.p + self.q

    @property
    def label(self) -> str:
        return f"su({self.p},{self.q})"

    @property
    def real_dimension(self) -> int:
        return (self.p + self.q) ** 2 - 1

    def signature(self) -> tuple[int, ...]:
        return tuple([1] * self.p + [-1] * self.q)


def su_n1(N: int) -> AlgebraType:
    return AlgebraType(N, 1)


def su22() -> AlgebraType:
    return AlgebraType(2, 2)


def algebra_for_space(space: BergmanSpace) -> AlgebraType:
    if isinstance(space, BallSpace):
        return su_n1(space.N)
    if isinstance(space, MatrixBallSpace):
        return su22()
    raise TypeError(f"no algebra associated with {space!r}")


def _coerce_matrix(size: int, matrix) -> Matrix:
    rows = tuple(tuple(ComplexRational.coerce(v) for v in row) for row in matrix)
    if len(rows) != size or any(len(r) != size for r in rows):
        raise ValueError(f"expected a {size}x{size} matrix")
    return rows


@dataclass(frozen=True)
class LieAlgebraElement:
    algebra: AlgebraType
    matrix: Matrix

    @staticmethod
    def create(algebra: AlgebraType, matrix, validate: bool = True) -> "LieAlgebraElement":
        rows = _coerce_matrix(algebra.size, matrix)
        if validate:
            ok, violations = validate_membership(rows, algebra)
            if not ok:
                raise ValueError(f"matrix is not in {algebra.label}: " + "; ".join(violations))
        return LieAlgebraElement(algebra, rows)

    @staticmethod
    def zero(algebra: AlgebraType) -> "LieAlgebraElement":
        z = cplx(0)
        size = algebra.size
        return LieAlgebraElement(algebra, tuple(tuple(z for _ in range(size)) for _ in range(size)))

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.matrix for v in row)

    def __add__(self, other: "LieAlgebraElement") -> "LieAlgebraElement":
        self._check(other)
        return LieAlgebraElement(
            self.algebra,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.matrix, other.matrix)),
        )

    def __sub__(self, other: "LieAlgebraElement") -> "LieAlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "LieAlgebraElement":
        # real scaling keeps membership; the factor must be a real rational
        c = as_fraction(c)
        return LieAlgebraElement(
            self.algebra, tuple(tuple(v * c for v in row) for row in self.matrix)
        )

    def _check(self, other: "LieAlgebraElement"):
        if self.algebra != other.algebra:
            raise ValueError(f"algebra mismatch: {self.algebra.label} != {other.algebra.label}")

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.label,
            "matrix": [[v.to_json() for v in row] for row in self.matrix],
        }


def validate_membership(matrix, algebra: AlgebraType) -> tuple[bool, list[str]]:
    """Check X*J + JX = 0 and tr X = 0 exactly; list every violated entry."""
    rows = _coerce_matrix(algebra.size, matrix)
    sig = algebra.signature()
    violations: list[str] = []
    size = algebra.size
    # (X*J + JX)[j][k] = conj(X[k][j]) * sig[k] + sig[j] * X[j][k]
    for j in range(size):
        for k in range(size):
            v = rows[k][j].conj() * sig[k] + rows[j][k] * sig[j]
            if not v.is_zero():
                violations.append(f"(X*J + JX)[{j + 1}][{k + 1}] = {v} != 0")
    trace = cplx(0)
    for j in range(size):
        trace = trace + rows[j][j]
    if not trace.is_zero():
        violations.append(f"trace(X) = {trace} != 0")
    return (not violations, violations)


def algebra_commutator(X: LieAlgebraElement, Y: LieAlgebraElement) -> LieAlgebraElement:
    """Matrix bracket XY - YX; stays in the algebra."""
    X._check(Y)
    size = X.algebra.size
    a, b = X.matrix, Y.matrix
    out = []
    for j in range(size):
        row = []
        for k in range(size):
            v = cplx(0)
            for l in range(size):
                v = v + a[j][l] * b[l][k] - b[j][l] * a[l][k]
            row.append(v)
        out.append(tuple(row))
    return LieAlgebraElement(X.algebra, tuple(out))


def _E(size: int, j: int, k: int, value) -> dict[tuple[int, int], ComplexRational]:
    return {(j, k): ComplexRational.coerce(value)}

def _matrix_from_entries(size: int, entries: dict[tuple[int, int], ComplexRational]) -> Matrix:
    return tuple(
        tuple(entries.get((j, k), cplx(0)) for k in range(size)) for j in range(size)
    )


@lru_cache(maxsize=None)
def basis(algebra: AlgebraType) -> tuple[tuple[str, LieAlgebraElement], ...]:
    """The ordered basis; tags are "X1:j", "X2:j,k", ... or "A1".."A15"."""
    if algebra.q == 1:
        return _ball_basis(algebra)
    return _mball_basis(algebra)


def _ball_basis(algebra: AlgebraType) -> tuple[tuple[str, LieAlgebraElement], ...]:
    N = algebra.p
    size = N + 1
    i = cplx(0, 1)
    out: list[tuple[str, LieAlgebraElement]] = []

    def put(tag, entries):
        out.append((tag, LieAlgebraElement(algebra, _matrix_from_entries(size, entries))))

    for j in range(1, N + 1):
        put(f"X1:{j}", {(j - 1, j - 1): i, (N, N): -i})
    for k in range(2, N + 1):
        for j in range(1, k):
            put(f"X2:{j},{k}", {(j - 1, k - 1): cplx(1), (k - 1, j - 1): cplx(-1)})
    for k in range(2, N + 1):
        for j in range(1, k):
            put(f"X3:{j},{k}", {(j - 1, k - 1): i, (k - 1, j - 1): i})
    for j in range(1, N + 1):
        put(f"X4:{j}", {(j - 1, N): cplx(1), (N, j - 1): cplx(1)})
    for j in range(1, N + 1):
        put(f"X5:{j}", {(j - 1, N): i, (N, j - 1): -i})
    return tuple(out)


def _mball_basis(algebra: AlgebraType) -> tuple[tuple[str, LieAlgebraElement], ...]:
    i = cplx(0, 1)
    one = cplx(1)
    entries = {
        "A1": {(0, 0): i, (3, 3): -i},
        "A2": {(1, 1): i, (3, 3): -i},
        "A3": {(2, 2): i, (3, 3): -i},
        "A4": {(0, 1): one, (1, 0): -one},
        "A5": {(2, 3): one, (3, 2): -one},
        "A6": {(0, 1): i, (1, 0): i},
        "A7": {(2, 3): i, (3, 2): i},
        "A8": {(0, 2): one, (2, 0): one},
        "A9": {(0, 3): one, (3, 0): one},
        "A10": {(1, 2): one, (2, 1): one},
        "A11": {(1, 3): one, (3, 1): one},
        "A12": {(0, 2): i, (2, 0): -i},
        "A13": {(0, 3): i, (3, 0): -i},
        "A14": {(1, 2): i, (2, 1): -i},
        "A15": {(1, 3): i, (3, 2): cplx(0), (3, 1): -i},
    }
    return tuple(
        (tag, LieAlgebraElement(algebra, _matrix_from_entries(4, e)))
        for tag, e in entries.items()
    )


def basis_tags(algebra: AlgebraType) -> tuple[str, ...]:
    return tuple(tag for tag, _ in basis(algebra))


def basis_element(algebra: AlgebraType, tag: str) -> LieAlgebraElement:
    for t, el in basis(algebra):
        if t == tag:
            return el
    raise KeyError(f"unknown basis element {tag!r} for {algebra.label}")


def realize(algebra: AlgebraType, coefficients) -> LieAlgebraElement:
    """Real-linear combination of the basis, coefficients in basis order."""
    els = basis(algebra)
    coeffs = [as_fraction(c) for c in coefficients]
    if len(coeffs) != len(els):
        raise ValueError(f"expected {len(els)} coefficients, got {len(coeffs)}")
    out = LieAlgebraElement.zero(algebra)
    for c, (_, el) in zip(coeffs, els):
        if c:
            out = out + el.scale(c)
    return out


def expand_in_basis(X: LieAlgebraElement) -> tuple[Fraction, ...]:
    """Exact real coordinates of X in the ordered basis.

    Coordinates are read off entrywise, then validated by realizing the
    result and comparing with X (this rejects matrices outside the algebra).
    """
    algebra = X.algebra
    M = X.matrix
    coeffs: list[Fraction] = []
    if algebra.q == 1:
        N = algebra.p
        for j in range(N):
            coeffs.append(M[j][j].imag_part())            # X1:j
        for k in range(2, N + 1):
            for j in range(1, k):
                coeffs.append(M[j - 1][k - 1].real_part())  # X2:j,k
        for k in range(2, N + 1):
            for j in range(1, k):
                coeffs.append(M[j - 1][k - 1].imag_part())  # X3:j,k
        for j in range(N):
            coeffs.append(M[j][N].real_part())             # X4:j
        for j in range(N):
            coeffs.append(M[j][N].imag_part())             # X5:j
    else:
        coeffs = [
            M[0][0].imag_part(),   # A1
            M[1][1].imag_part(),   # A2
            M[2][2].imag_part(),   # A3
            M[0][1].real_part(),   # A4
            M[2][3].real_part(),   # A5
            M[0][1].imag_part(),   # A6
            M[2][3].imag_part(),   # A7
            M[0][2].real_part(),   # A8
            M[0][3].real_part(),   # A9
            M[1][2].real_part(),   # A10
            M[1][3].real_part(),   # A11
            M[0][2].imag_part(),   # A12
            M[0][3].imag_part(),   # A13
            M[1][2].imag_part(),   # A14
            M[1][3].imag_part(),   # A15
        ]
    if realize(algebra, coeffs) != X:
        ok, violations = validate_membership(M, algebra)
        detail = "; ".join(violations) if violations else "entries outside the basis span"
        raise ValueError(f"matrix is not a valid {algebra.label} element: {detail}")
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Differentiated representation: basis operator tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _ball_basis_operator_cached(N: int, xi: Fraction, tag: str) -> FirstOrderOperator:
    return _ball_basis_operator(BallSpace(N, xi), tag)


@lru_cache(maxsize=4096)
def _mball_basis_operator_cached(xi: Fraction, tag: str) -> FirstOrderOperator:
    return _mball_basis_operator(MatrixBallSpace(xi), tag)


def _ball_basis_operator(space: BallSpace, tag: str) -> FirstOrderOperator:
    N, xi = space.N, space.xi
    i = cplx(0, 1)
    rho = N + xi + 1
    z = [Polynomial.variable(N, k) for k in range(1, N + 1)]
    zero = Polynomial.zero(N)
    f0 = zero
    f = [zero] * N
    kind, _, idx = tag.partition(":")
    if kind == "X1":
        j = int(idx) - 1
        f0 = Polynomial.constant(N, -i * rho)
        f = [(-2 * i) * z[j] if l == j else -i * z[l] for l in range(N)]
    elif kind in ("X2", "X3"):
        j, k = (int(v) - 1 for v in idx.split(","))
        f = list(f)
        if kind == "X2":
            # sign chosen so the whole table realizes the bracket with one
            # uniform global sign; the opposite convention breaks uniformity
            f[j] = z[k]
            f[k] = -z[j]
        else:
            f[j] = -i * z[k]
            f[k] = -i * z[j]
    elif kind == "X4":
        j = int(idx) - 1
        f0 = rho * z[j]
        f = [z[j] * z[j] - 1 if l == j else z[l] * z[j] for l in range(N)]
    elif kind == "X5":
        j = int(idx) - 1
        f0 = (i * rho) * z[j]
        f = [i * (z[j] * z[j] + 1) if l == j else i * (z[l] * z[j]) for l in range(N)]
    else:
        raise KeyError(f"unknown ball basis tag {tag!r}")
    return FirstOrderOperator(N, f0, tuple(f))


def _mball_basis_operator(space: MatrixBallSpace, tag: str) -> FirstOrderOperator:
    xi = space.xi
    i = cplx(0, 1)
    rho = xi + 4
    z1, z2, z3, z4 = (Polynomial.variable(4, k) for k in range(1, 5))
    zero = Polynomial.zero(4)
    one = Polynomial.constant(4, 1)
    table = {
        "A1": (Polynomial.constant(4, i * rho), (i * z1, (2 * i) * z2, zero, i * z4)),
        "A2": (Polynomial.constant(4, i * rho), (zero, i * z2, i * z3, (2 * i) * z4)),
        "A3": (zero, (-i * z1, i * z2, -i * z3, i * z4)),
        "A4": (zero, (z3, z4, -z1, -z2)),
        "A5": (zero, (z2, -z1, z4, -z3)),
        "A6": (zero, (i * z3, i * z4, i * z1, i * z2)),
        "A7": (zero, (-i * z2, -i * z1, -i * z4, -i * z3)),
        "A8": ((-rho) * z1, (one - z1 * z1, -(z1 * z2), -(z1 * z3), -(z2 * z3))),
        "A9": ((-rho) * z2, (-(z1 * z2), one - z2 * z2, -(z1 * z4), -(z2 * z4))),
        "A10": ((-rho) * z3, (-(z1 * z3), -(z1 * z4), one - z3 * z3, -(z3 * z4))),
        "A11": ((-rho) * z4, (-(z2 * z3), -(z2 * z4), -(z3 * z4), one - z4 * z4)),
        "A12": ((i * rho) * z1, (i * (one + z1 * z1), i * (z1 * z2), i * (z1 * z3), i * (z2 * z3))),
        "A13": ((i * rho) * z2, (i * (z1 * z2), i * (one + z2 * z2), i * (z1 * z4), i * (z2 * z4))),
        "A14": ((i * rho) * z3, (i * (z1 * z3), i * (z1 * z4), i * (one + z3 * z3), i * (z3 * z4))),
        "A15": ((i * rho) * z4, (i * (z2 * z3), i * (z2 * z4), i * (z3 * z4), i * (one + z4 * z4))),
    }
    if tag not in table:
        raise KeyError(f"unknown matrix-ball basis tag {tag!r}")
    f0, f = table[tag]
    return FirstOrderOperator(4, f0, f)


def basis_operator(space: BergmanSpace, tag: str) -> FirstOrderOperator:
    if isinstance(space, BallSpace):
        return _ball_basis_operator_cached(space.N, space.xi, tag)
    if isinstance(space, MatrixBallSpace):
        return _mball_basis_operator_cached(space.xi, tag)
    raise TypeError(f"no basis operators for {space!r}")


def pi_xi(space: BergmanSpace, X: LieAlgebraElement) -> FirstOrderOperator:
    """The differentiated discrete-series operator of X on the given space."""
    algebra = algebra_for_space(space)
    if X.algebra != algebra:
        raise ValueError(
            f"element of {X.algebra.label} does not act on {space!r} (needs {algebra.label})"
        )
    coeffs = expand_in_basis(X)
    out = FirstOrderOperator.zero(space.dim)
    for c, (tag, _) in zip(coeffs, basis(algebra)):
        if c:
            out = out + basis_operator(space, tag) * c
    return out


# ---------------------------------------------------------------------------
# Bracket sign
# ---------------------------------------------------------------------------

_SIGN_PAIR = {1: ("X1:1", "X4:1"), 2: ("A4", "A6")}


@lru_cache(maxsize=None)
def bracket_sign(algebra: AlgebraType) -> int:
    """The uniform sign s with [pi(X), pi(Y)] = s * pi([X, Y]).

    Computed once from a designated pair with nonzero bracket; the test suite
    asserts the same sign for every basis pair.  The sign does not depend on
    xi (only order-zero parts carry xi, and they cancel in the bracket), so a
    fixed space is used here.
    """
    space: BergmanSpace = BallSpace(algebra.p, 0) if algebra.q == 1 else MatrixBallSpace(0)
    tag_a, tag_b = _SIGN_PAIR[algebra.q]
    A = basis_element(algebra, tag_a)
    B = basis_element(algebra, tag_b)
    op_bracket = basis_operator(space, tag_a).commutator(basis_operator(space, tag_b))
    mat_bracket = pi_xi(space, algebra_commutator(A, B))
    if op_bracket == mat_bracket:
        return 1
    if op_bracket == mat_bracket * -1:
        return -1
    raise AssertionError(
        f"operator bracket is not proportional to the algebra bracket for {algebra.label}"
    )
