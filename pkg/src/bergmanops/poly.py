"""Multivariate polynomials with exact complex-rational coefficients.

A polynomial in N complex variables is a finite map from multi-indices
(length-N tuples of non-negative ints) to nonzero ``ComplexRational``
coefficients.  The zero polynomial has an empty term map.  All operations are
pure; instances are treated as immutable.

Variable indices in the public API are 1-based (z1..zN), matching the CLI
syntax.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .scalars import ComplexRational, cplx

MultiIndex = tuple[int, ...]


def mi_add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))

def mi_sub(a: MultiIndex, b: MultiIndex) -> MultiIndex | None:
    """Componentwise difference, or None when any component would go negative."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(v < 0 for v in out):
        return None
    return out

def mi_degree(a: MultiIndex) -> int:
    return sum(a)

def unit_index(dim: int, k: int) -> MultiIndex:
    """The multi-index e_k (k is 1-based)."""
    if not 1 <= k <= dim:
        raise IndexError(f"variable index {k} out of range 1..{dim}")
    return tuple(1 if j == k - 1 else 0 for j in range(dim))

def zero_index(dim: int) -> MultiIndex:
    return (0,) * dim

def grlex_key(n: MultiIndex):
    """Graded lexicographic sort key (ties broken lexicographically)."""
    return (mi_degree(n), n)


def indices_of_degree(dim: int, degree: int) -> list[MultiIndex]:
    """All multi-indices in ``dim`` variables of total degree exactly ``degree``."""
    if dim == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in indices_of_degree(dim - 1, degree - first):
            out.append((first,) + rest)
    return out


def indices_up_to_degree(dim: int, degree: int) -> list[MultiIndex]:
    """All multi-indices with |n| <= degree, in graded lexicographic order."""
    out: list[MultiIndex] = []
    for d in range(degree + 1):
        out.extend(sorted(indices_of_degree(dim, d)))
    return out


class Polynomial:
    """Finite map MultiIndex -> ComplexRational in a fixed number of variables."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[MultiIndex, ComplexRational] | None = None):
        if dim < 1:
            raise ValueError("dimension must be a positive integer")
        clean: dict[MultiIndex, ComplexRational] = {}
        if terms:
            for n, c in terms.items():
                if len(n) != dim:
                    raise ValueError(f"index {n} has length {len(n)}, expected {dim}")
                c = ComplexRational.coerce(c)
                if not c.is_zero():
                    clean[tuple(n)] = c
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Polynomial":
        return Polynomial(dim)

    @staticmethod
    def constant(dim: int, value) -> "Polynomial":
        return Polynomial(dim, {zero_index(dim): ComplexRational.coerce(value)})

    @staticmethod
    def variable(dim: int, k: int) -> "Polynomial":
        """The polynomial z_k (k is 1-based)."""
        return Polynomial(dim, {unit_index(dim, k): cplx(1)})

    @staticmethod
    def monomial(index: MultiIndex, coeff=1) -> "Polynomial":
        return Polynomial(len(index), {tuple(index): ComplexRational.coerce(coeff)})

    # -- bookkeeping ---------------------------------------------------------

    def coefficient(self, index: MultiIndex) -> ComplexRational:
        return self.terms.get(tuple(index), cplx(0))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mi_degree(n) for n in self.terms)

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def constant_value(self) -> ComplexRational:
        """The coefficient of z^0 (the whole value if the polynomial is constant)."""
        return self.coefficient(zero_index(self.dim))

    def _check_dim(self, other: "Polynomial"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")

    def items(self) -> Iterator[tuple[MultiIndex, ComplexRational]]:
        return iter(self.terms.items())

    def sorted_terms(self) -> list[tuple[MultiIndex, ComplexRational]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ComplexRational)):
            other = Polynomial.constant(self.dim, other)
        self._check_dim(other)
        out = dict(self.terms)
        for n, c in other.terms.items():
            s = out.get(n, cplx(0)) + c
            if s.is_zero():
                out.pop(n, None)
            else:
                out[n] = s
        return Polynomial(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.dim, {n: -c for n, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ComplexRational)):
            other = Polynomial.constant(self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ComplexRational)):
            c = ComplexRational.coerce(other)
            if c.is_zero():
                return Polynomial.zero(self.dim)
            return Polynomial(self.dim, {n: a * c for n, a in self.terms.items()})
        self._check_dim(other)
        out: dict[MultiIndex, ComplexRational] = {}
        for n, a in self.terms.items():
            for m, b in other.terms.items():
                k = mi_add(n, m)
                s = out.get(k, cplx(0)) + a * b
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return Polynomial(self.dim, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def conjugate_coefficients(self) -> "Polynomial":
        """Conjugate every coefficient (the monomials are untouched)."""
        return Polynomial(self.dim, {n: c.conj() for n, c in self.terms.items()})

    # -- calculus ------------------------------------------------------------

    def diff(self, k: int) -> "Polynomial":
        """Partial derivative with respect to z_k (k is 1-based)."""
        if not 1 <= k <= self.dim:
            raise IndexError(f"variable index {k} out of range 1..{self.dim}")
        j = k - 1
        out: dict[MultiIndex, ComplexRational] = {}
        for n, c in self.terms.items():
            if n[j] == 0:
                continue
            down = n[:j] + (n[j] - 1,) + n[j + 1:]
            out[down] = out.get(down, cplx(0)) + c * n[j]
        return Polynomial(self.dim, out)

    def homogeneous_parts(self) -> list[tuple[int, "Polynomial"]]:
        """Split into homogeneous components, degrees strictly increasing."""
        buckets: dict[int, dict[MultiIndex, ComplexRational]] = {}
        for n, c in self.terms.items():
            buckets.setdefault(mi_degree(n), {})[n] = c
        return [(d, Polynomial(self.dim, buckets[d])) for d in sorted(buckets)]

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.dim,
            {n: c for n, c in self.terms.items() if mi_degree(n) == degree},
        )

    def eval(self, point: Iterable[complex]) -> complex:
        """Numeric evaluation at a point of complex floats."""
        pt = list(point)
        if len(pt) != self.dim:
            raise ValueError(f"point has length {len(pt)}, expected {self.dim}")
        total = 0j
        for n, c in self.terms.items():
            value = complex(c)
            for z, e in zip(pt, n):
                if e:
                    value *= z ** e
            total += value
        return total

    # -- formatting ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for n, c in self.sorted_terms():
            mono = "*".join(
                f"z{j + 1}^{e}" if e > 1 else f"z{j + 1}"
                for j, e in enumerate(n) if e
            )
            if not mono:
                cstr = str(c)
                parts.append(f"({cstr})" if " " in cstr else cstr)
                continue
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                cstr = str(c)
                if " " in cstr:
                    cstr = f"({cstr})"
                parts.append(f"{cstr}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"Polynomial({self.dim}, {self})"

    def to_json(self) -> list[dict]:
        return [
            {"index": list(n), **c.to_json()}
            for n, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(dim: int, data: list[dict]) -> "Polynomial":
        return Polynomial(
            dim,
            {tuple(entry["index"]): ComplexRational.from_json(entry) for entry in data},
        )


# Spec-level operation names, kept as thin wrappers so call sites can mirror
# the documented contracts directly.

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q

def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q

def partial_derivative(p: Polynomial, k: int) -> Polynomial:
    return p.diff(k)

def homogeneous_decompose(p: Polynomial) -> list[tuple[int, Polynomial]]:
    return p.homogeneous_parts()

def poly_eval(p: Polynomial, point: Iterable[complex]) -> complex:
    return p.eval(point)
