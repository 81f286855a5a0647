"""First-order holomorphic differential operators.

An operator is ``L = f0 + sum_k f_k d/dz_k`` with polynomial coefficients,
stored in normal order (all derivatives to the right).  The module provides
exact application to polynomials, symbolic commutators, coefficient
extraction, and a Gram-pair symmetry test against a Bergman space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import (
    MultiIndex,
    Polynomial,
    grlex_key,
    indices_up_to_degree,
    mi_degree,
    zero_index,
)
from .scalars import ComplexRational, cplx
from .spaces import BergmanSpace, ExactIPValue, compatible_indices


class FirstOrderOperator:
    """f0 + sum over k of f[k] * d/dz_{k+1}, all coefficients exact."""

    __slots__ = ("dim", "f0", "f")

    def __init__(self, dim: int, f0: Polynomial, f: tuple[Polynomial, ...] | list[Polynomial]):
        if f0.dim != dim or any(p.dim != dim for p in f):
            raise ValueError("coefficient polynomials must share the operator dimension")
        if len(f) != dim:
            raise ValueError(f"expected {dim} derivative coefficients, got {len(f)}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "f0", f0)
        object.__setattr__(self, "f", tuple(f))

    def __setattr__(self, name, value):
        raise AttributeError("FirstOrderOperator is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "FirstOrderOperator":
        z = Polynomial.zero(dim)
        return FirstOrderOperator(dim, z, tuple(z for _ in range(dim)))

    @staticmethod
    def constant(dim: int, value) -> "FirstOrderOperator":
        z = Polynomial.zero(dim)
        return FirstOrderOperator(dim, Polynomial.constant(dim, value), tuple(z for _ in range(dim)))

    @staticmethod
    def partial(dim: int, k: int) -> "FirstOrderOperator":
        """The operator d/dz_k (k is 1-based)."""
        coeffs = [Polynomial.zero(dim) for _ in range(dim)]
        coeffs[k - 1] = Polynomial.constant(dim, 1)
        return FirstOrderOperator(dim, Polynomial.zero(dim), tuple(coeffs))

    @staticmethod
    def euler(dim: int) -> "FirstOrderOperator":
        """sum_k z_k d/dz_k."""
        return FirstOrderOperator(
            dim,
            Polynomial.zero(dim),
            tuple(Polynomial.variable(dim, k) for k in range(1, dim + 1)),
        )

    # -- linear structure -------------------------------------------------

    def _check_dim(self, other: "FirstOrderOperator"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ComplexRational)):
            other = FirstOrderOperator.constant(self.dim, other)
        self._check_dim(other)
        return FirstOrderOperator(
            self.dim,
            self.f0 + other.f0,
            tuple(a + b for a, b in zip(self.f, other.f)),
        )

    __radd__ = __add__

    def __neg__(self):
        return FirstOrderOperator(self.dim, -self.f0, tuple(-p for p in self.f))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ComplexRational)):
            other = FirstOrderOperator.constant(self.dim, other)
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction, ComplexRational)):
            return NotImplemented
        return FirstOrderOperator(
            self.dim, self.f0 * scalar, tuple(p * scalar for p in self.f)
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FirstOrderOperator):
            return NotImplemented
        return self.dim == other.dim and self.f0 == other.f0 and self.f == other.f

    def __hash__(self):
        return hash((self.dim, self.f0, self.f))

    def is_zero(self) -> bool:
        return self.f0.is_zero() and all(p.is_zero() for p in self.f)

    def has_zero_derivative_part(self) -> bool:
        return all(p.is_zero() for p in self.f)

    # -- action ------------------------------------------------------------

    def apply(self, p: Polynomial) -> Polynomial:
        if p.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {p.dim}")
        out = self.f0 * p
        for k in range(self.dim):
            if not self.f[k].is_zero():
                out = out + self.f[k] * p.diff(k + 1)
        return out

    def commutator(self, other: "FirstOrderOperator") -> "FirstOrderOperator":
        """[self, other], computed symbolically; again first order."""
        self._check_dim(other)
        dim = self.dim
        f0 = Polynomial.zero(dim)
        for j in range(dim):
            f0 = f0 + self.f[j] * other.f0.diff(j + 1) - other.f[j] * self.f0.diff(j + 1)
        coeffs = []
        for k in range(dim):
            g = Polynomial.zero(dim)
            for j in range(dim):
                g = g + self.f[j] * other.f[k].diff(j + 1) - other.f[j] * self.f[k].diff(j + 1)
            coeffs.append(g)
        return FirstOrderOperator(dim, f0, tuple(coeffs))

    def coefficient(self, alpha: MultiIndex, beta: MultiIndex) -> ComplexRational:
        """The z^beta coefficient of f_alpha; alpha must be 0 or a unit index."""
        alpha = tuple(alpha)
        if len(alpha) != self.dim:
            raise ValueError(f"alpha has length {len(alpha)}, expected {self.dim}")
        if alpha == zero_index(self.dim):
            return self.f0.coefficient(beta)
        if mi_degree(alpha) == 1:
            k = alpha.index(1)
            return self.f[k].coefficient(beta)
        raise ValueError(f"alpha must be zero or a unit multi-index, got {alpha}")

    def __str__(self):
        parts = []
        if not self.f0.is_zero():
            parts.append(f"({self.f0})")
        for k, p in enumerate(self.f):
            if p.is_zero():
                continue
            if p.is_constant() and p.constant_value() == 1:
                parts.append(f"d{k + 1}")
            else:
                parts.append(f"({p})*d{k + 1}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FirstOrderOperator({self})"

    def to_json(self) -> dict:
        return {"f0": self.f0.to_json(), "f": [p.to_json() for p in self.f]}

    @staticmethod
    def from_json(dim: int, data: dict) -> "FirstOrderOperator":
        return FirstOrderOperator(
            dim,
            Polynomial.from_json(dim, data["f0"]),
            tuple(Polynomial.from_json(dim, p) for p in data["f"]),
        )


def op_apply(L: FirstOrderOperator, p: Polynomial) -> Polynomial:
    return L.apply(p)


def op_compose_commutator(A: FirstOrderOperator, B: FirstOrderOperator) -> FirstOrderOperator:
    return A.commutator(B)


Witness = tuple[MultiIndex, MultiIndex, ExactIPValue, ExactIPValue]


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of testing <L z^n, z^m> = <z^n, L z^m> over a degree window."""

    symmetric: bool
    witnesses: tuple[Witness, ...]
    degree_checked: int

    def to_json(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "degree_checked": self.degree_checked,
            "witnesses": [
                {
                    "n": list(n),
                    "m": list(m),
                    "lhs": {"coefficient": lhs.coefficient.to_json(), "unit": lhs.unit.value},
                    "rhs": {"coefficient": rhs.coefficient.to_json(), "unit": rhs.unit.value},
                }
                for n, m, lhs, rhs in self.witnesses
            ],
        }


def gram_pair_sides(
    space: BergmanSpace, L: FirstOrderOperator, degree: int
) -> dict[tuple[MultiIndex, MultiIndex], ComplexRational]:
    """Sparse table of <L z^n, z^m> over all pairs with |n|, |m| <= degree.

    Only pairs that can be nonzero are materialized (monomial orthogonality on
    the ball, selection rules on the matrix ball).  The other side of the
    symmetry test follows from <z^n, L z^m> = conj(<L z^m, z^n>).
    """
    if L.dim != space.dim:
        raise ValueError("operator dimension does not match the domain")
    lhs: dict[tuple[MultiIndex, MultiIndex], ComplexRational] = {}
    for n in indices_up_to_degree(space.dim, degree):
        Ln = L.apply(Polynomial.monomial(n))
        for nprime, coeff in Ln.items():
            for m in compatible_indices(space, nprime, degree):
                v = space.mono_ip(nprime, m)
                if v.is_zero():
                    continue
                key = (n, m)
                total = lhs.get(key, cplx(0)) + coeff * v.coefficient
                if total.is_zero():
                    lhs.pop(key, None)
                else:
                    lhs[key] = total
    return lhs


def gram_pair_witnesses(
    space: BergmanSpace, L: FirstOrderOperator, degree: int, skew: bool = False
) -> tuple[Witness, ...]:
    """All pairs where <L z^n, z^m> != (+/-)<z^n, L z^m>, sorted canonically.

    ``skew=False`` tests symmetry, ``skew=True`` tests skew-symmetry.
    """
    lhs = gram_pair_sides(space, L, degree)
    pair_keys = set(lhs)
    pair_keys.update((m, n) for n, m in lhs)
    sign = -1 if skew else 1
    witnesses = []
    zero = cplx(0)
    for n, m in pair_keys:
        left = lhs.get((n, m), zero)
        right = lhs.get((m, n), zero).conj() * sign
        if left != right:
            witnesses.append(
                (n, m, ExactIPValue(left, space.unit), ExactIPValue(right, space.unit))
            )
    witnesses.sort(key=lambda w: (mi_degree(w[0]), mi_degree(w[1]), grlex_key(w[0]), grlex_key(w[1])))
    return tuple(witnesses)


def symmetry_check(space: BergmanSpace, L: FirstOrderOperator, degree: int = 4) -> SymmetryReport:
    """Exact Gram-pair symmetry test on all monomial pairs up to ``degree``.

    Degrees below 2 cannot certify the coefficient relations, so they are
    rejected.
    """
    if degree < 2:
        raise ValueError("symmetry_check requires degree >= 2")
    witnesses = gram_pair_witnesses(space, L, degree, skew=False)
    return SymmetryReport(
        symmetric=not witnesses,
        witnesses=witnesses,
        degree_checked=degree,
    )
