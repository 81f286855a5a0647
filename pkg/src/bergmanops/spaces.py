"""Exact monomial inner products on weighted Bergman spaces.

Two domains are supported:

* the unit ball in C^N, with the weight normalized to a probability measure,
  so ``<1, 1> = 1`` and monomial norms are plain rationals;
* the 2x2 matrix ball (operator norm < 1, coordinates z1..z4 = row-major
  entries), with plain Lebesgue measure on C^4 and weight det(I - Z*Z)^xi.
  Every monomial inner product there is an exact rational multiple of pi^4.

The matrix-ball value is computed by reducing the integral to two iterated
integrals over the unit ball of C^2 (a binomial expansion of the substituted
second column), each of which is a product of two Beta factors that stay
rational for rational xi.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import (
    MultiIndex,
    Polynomial,
    grlex_key,
    indices_up_to_degree,
    mi_degree,
)
from .scalars import ComplexRational, as_fraction, cplx, format_fraction


class Unit(enum.Enum):
    """Scale carried by an exact inner-product value."""

    ONE = "1"
    PI4 = "pi^4"


@dataclass(frozen=True)
class ExactIPValue:
    """An exact inner-product value: ``coefficient`` times the unit's scale."""

    coefficient: ComplexRational
    unit: Unit

    def __add__(self, other: "ExactIPValue") -> "ExactIPValue":
        if self.unit is not other.unit:
            raise ValueError(f"cannot add values with units {self.unit.value} and {other.unit.value}")
        return ExactIPValue(self.coefficient + other.coefficient, self.unit)

    def scale(self, c) -> "ExactIPValue":
        return ExactIPValue(self.coefficient * ComplexRational.coerce(c), self.unit)

    def conj(self) -> "ExactIPValue":
        return ExactIPValue(self.coefficient.conj(), self.unit)

    def ratio(self, other: "ExactIPValue") -> ComplexRational:
        """Exact ratio of two same-unit values (the scale cancels)."""
        if self.unit is not other.unit:
            raise ValueError("ratio requires matching units")
        return self.coefficient / other.coefficient

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()

    def __str__(self):
        if self.unit is Unit.ONE:
            return str(self.coefficient)
        return f"({self.coefficient}) * pi^4"

    def to_json(self) -> dict:
        if self.coefficient.is_real():
            coeff = format_fraction(self.coefficient.re)
        else:
            coeff = self.coefficient.to_json()
        return {"coefficient": coeff, "unit": self.unit.value}


class BergmanSpace:
    """Base for the two supported weighted Bergman domains."""

    xi: Fraction
    dim: int
    unit: Unit

    def mono_ip(self, n: MultiIndex, m: MultiIndex) -> ExactIPValue:
        raise NotImplementedError

    def _check_index(self, n: MultiIndex):
        if len(n) != self.dim:
            raise ValueError(f"index {n} has length {len(n)}, expected {self.dim}")

    def ip(self, p: Polynomial, q: Polynomial) -> ExactIPValue:
        """Sesquilinear extension over monomials (conjugate-linear in q)."""
        if p.dim != self.dim or q.dim != self.dim:
            raise ValueError("polynomial dimension does not match the domain")
        total = cplx(0)
        for n, a in p.items():
            for m, b in q.items():
                v = self.mono_ip(n, m)
                if not v.is_zero():
                    total = total + a * b.conj() * v.coefficient
        return ExactIPValue(total, self.unit)

    def norm_one_squared(self) -> ExactIPValue:
        z = (0,) * self.dim
        return self.mono_ip(z, z)

    def normalized_ip(self, p: Polynomial, q: Polynomial) -> ComplexRational:
        """<p, q> / <1, 1>, an exact scale-free value."""
        return self.ip(p, q).ratio(self.norm_one_squared())

    def gram_matrix(self, degree: int) -> "GramMatrix":
        if degree < 0:
            raise ValueError("degree must be >= 0")
        indices = tuple(indices_up_to_degree(self.dim, degree))
        entries = tuple(
            tuple(self.mono_ip(n, m) for m in indices) for n in indices
        )
        return GramMatrix(indices=indices, entries=entries)


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian matrix of monomial inner products, graded-lex ordered."""

    indices: tuple[MultiIndex, ...]
    entries: tuple[tuple[ExactIPValue, ...], ...]

    def entry(self, n: MultiIndex, m: MultiIndex) -> ExactIPValue:
        i = self.indices.index(tuple(n))
        j = self.indices.index(tuple(m))
        return self.entries[i][j]


def _validate_xi(xi) -> Fraction:
    xi = as_fraction(xi)
    if xi <= -1:
        raise ValueError(f"weight parameter must satisfy xi > -1, got {xi}")
    return xi


class BallSpace(BergmanSpace):
    """Weighted Bergman space over the unit ball of C^N, probability measure."""

    unit = Unit.ONE

    def __init__(self, N: int, xi):
        if N < 1:
            raise ValueError("ball dimension must be >= 1")
        self.N = N
        self.dim = N
        self.xi = _validate_xi(xi)

    def __repr__(self):
        return f"BallSpace(N={self.N}, xi={self.xi})"

    def ip(self, p: Polynomial, q: Polynomial) -> ExactIPValue:
        # monomials are orthogonal on the ball, so only shared indices pair
        if p.dim != self.dim or q.dim != self.dim:
            raise ValueError("polynomial dimension does not match the domain")
        total = cplx(0)
        for n, a in p.items():
            b = q.terms.get(n)
            if b is not None:
                total = total + a * b.conj() * _ball_norm_sq(self.N, self.xi, n)
        return ExactIPValue(total, Unit.ONE)

    def mono_ip(self, n: MultiIndex, m: MultiIndex) -> ExactIPValue:
        self._check_index(n)
        self._check_index(m)
        if tuple(n) != tuple(m):
            return ExactIPValue(cplx(0), Unit.ONE)
        return ExactIPValue(cplx(_ball_norm_sq(self.N, self.xi, tuple(n))), Unit.ONE)


@lru_cache(maxsize=None)
def _ball_norm_sq(N: int, xi: Fraction, n: MultiIndex) -> Fraction:
    # ||z^n||^2 = n! / prod_{j=1..|n|} (N + xi + j); the Gamma ratio is
    # expanded as a rising product so rational xi stays exact.
    num = 1
    for e in n:
        for j in range(2, e + 1):
            num *= j
    den = Fraction(1)
    for j in range(1, mi_degree(n) + 1):
        den *= N + xi + j
    return Fraction(num) / den


def mono_ip_ball(space: BallSpace, n: MultiIndex, m: MultiIndex) -> ExactIPValue:
    return space.mono_ip(n, m)


def ball_beta_integral(a: int, c: int, s: int, t) -> Fraction:
    """Exact value of a radial power integral over the unit ball of C^2.

    Returns (1/pi^2) * integral over |w1|^2+|w2|^2 < 1 of
    ``|w1|^(2a) |w2|^(2c) (|w1|^2+|w2|^2)^(-s) (1-|w1|^2-|w2|^2)^t``
    with respect to Lebesgue measure, which reduces to
    ``B(a+1, c+1) * B(a+c-s+2, t+1)``.  Both Beta factors are rational: the
    first has integer arguments and the second an integer first argument.
    """
    t = as_fraction(t)
    if a < 0 or c < 0:
        raise ValueError("powers a, c must be non-negative")
    if a + c - s + 2 < 1:
        raise ValueError("need a + c - s + 2 >= 1 for convergence")
    if t <= -1:
        raise ValueError("need t > -1 for convergence")
    first = Fraction(_factorial(a) * _factorial(c), _factorial(a + c + 1))
    k = a + c - s + 2
    rising = Fraction(1)
    for j in range(1, k + 1):
        rising *= t + j
    second = Fraction(_factorial(k - 1)) / rising
    return first * second


def _factorial(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def check_selection_rules(n: MultiIndex, m: MultiIndex) -> bool:
    """Necessary conditions for a nonzero matrix-ball monomial inner product."""
    if len(n) != 4 or len(m) != 4:
        raise ValueError("matrix-ball multi-indices have length 4")
    n1, n2, n3, n4 = n
    m1, m2, m3, m4 = m
    return n2 + n4 == m2 + m4 and n1 + n2 == m1 + m2 and n2 + m3 == n3 + m2


class MatrixBallSpace(BergmanSpace):
    """Weighted Bergman space over the 2x2 matrix ball, Lebesgue measure on C^4."""

    dim = 4
    unit = Unit.PI4

    def __init__(self, xi):
        self.xi = _validate_xi(xi)

    def __repr__(self):
        return f"MatrixBallSpace(xi={self.xi})"

    def mono_ip(self, n: MultiIndex, m: MultiIndex) -> ExactIPValue:
        self._check_index(n)
        self._check_index(m)
        return ExactIPValue(
            cplx(_matrix_ball_ip(self.xi, tuple(n), tuple(m))), Unit.PI4
        )


@lru_cache(maxsize=None)
def _matrix_ball_ip(xi: Fraction, n: MultiIndex, m: MultiIndex) -> Fraction:
    """<Z^n, Z^m> / pi^4 via the iterated-integral binomial expansion.

    The second column of Z is substituted by a unitary times sqrt(diag(1, L))
    with L = 1 - |z1|^2 - |z3|^2, which turns the inner product into a
    quadruple binomial sum of products of two C^2-ball integrals.  Terms that
    fail angular matching in either integral vanish and are skipped; all
    surviving terms have integer half-powers, so everything stays rational.
    """
    if not check_selection_rules(n, m):
        return Fraction(0)
    n1, n2, n3, n4 = n
    m1, m2, m3, m4 = m
    sigma = n2 + n4  # equals m2 + m4 once selection rules hold
    total = Fraction(0)
    for alpha in range(n2 + 1):
        for beta in range(m2 + 1):
            for gamma in range(n4 + 1):
                phi_val = alpha + gamma - beta  # angular matching in z4
                if not 0 <= phi_val <= m4:
                    continue
                phi = phi_val
                a = n1 + alpha + m4 - phi
                if a != m1 + beta + n4 - gamma:  # angular matching in z1
                    continue
                c = n3 + m2 - beta + gamma
                if c != m3 + n2 - alpha + phi:  # angular matching in z3
                    continue
                p = n2 + n4 - alpha - gamma
                if p != m2 + m4 - beta - phi:  # angular matching in z2
                    continue
                q = alpha + gamma
                sign = -1 if (n2 + m2 - alpha - beta) % 2 else 1
                coeff = comb(n2, alpha) * comb(m2, beta) * comb(n4, gamma) * comb(m4, phi)
                inner_v = ball_beta_integral(a, c, sigma, xi + 1 + q)
                inner_w = ball_beta_integral(p, q, 0, xi)
                total += sign * coeff * inner_v * inner_w
    return total


def mono_ip_matrix_ball(space: MatrixBallSpace, n: MultiIndex, m: MultiIndex) -> ExactIPValue:
    return space.mono_ip(n, m)


def ip(space: BergmanSpace, p: Polynomial, q: Polynomial) -> ExactIPValue:
    return space.ip(p, q)


def gram_matrix(space: BergmanSpace, degree: int) -> GramMatrix:
    return space.gram_matrix(degree)


def _selection_key(n: MultiIndex) -> tuple[int, int, int]:
    return (n[1] + n[3], n[0] + n[1], n[1] - n[2])


@lru_cache(maxsize=None)
def _selection_classes_up_to(max_degree: int) -> dict[tuple[int, int, int], tuple[MultiIndex, ...]]:
    """Length-4 indices with |n| <= max_degree grouped by selection invariants.

    Two indices can pair to a nonzero inner product only when they share the
    key ``(n2+n4, n1+n2, n2-n3)``; the key already determines the degree.
    """
    out: dict[tuple[int, int, int], list[MultiIndex]] = {}
    for n in indices_up_to_degree(4, max_degree):
        out.setdefault(_selection_key(n), []).append(n)
    return {k: tuple(sorted(v, key=grlex_key)) for k, v in out.items()}


def selection_classes(dim4_indices: list[MultiIndex]) -> dict[tuple[int, int, int], list[MultiIndex]]:
    """Group length-4 indices by their selection-rule invariants."""
    out: dict[tuple[int, int, int], list[MultiIndex]] = {}
    for n in dim4_indices:
        out.setdefault(_selection_key(n), []).append(n)
    return out


def compatible_indices(space: BergmanSpace, n: MultiIndex, max_degree: int) -> tuple[MultiIndex, ...]:
    """Indices m with |m| <= max_degree that can pair nonzero with z^n."""
    if mi_degree(n) > max_degree:
        return ()
    if isinstance(space, BallSpace):
        return (tuple(n),)
    return _selection_classes_up_to(max_degree).get(_selection_key(n), ())
