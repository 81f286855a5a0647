"""The shifted Euler operator as a weighted shift between ball spaces.

``E_c = sum_j z_j d/dz_j + c`` scales the degree-k homogeneous part of a
polynomial by ``c + k``.  As a map from the weight-xi ball space to the
weight-(xi+2) one it is bounded above and below; this module computes the
exact optimal two-sided constants, which are the infimum and supremum over
k of

    r(k) = (c+k)^2 (N+xi+2)(N+xi+1) / ((N+xi+2+k)(N+xi+1+k)).

r is a rational function of k whose forward difference has a linear numerator,
so the extrema sit at k = 0, at the single integer turning point, or in the
k -> infinity limit (N+xi+2)(N+xi+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .operators import FirstOrderOperator
from .poly import Polynomial
from .scalars import as_fraction, format_fraction
from .spaces import BallSpace


def _check_c(c: Fraction):
    if c.denominator == 1 and c.numerator <= 0:
        raise ValueError(f"c must not be 0 or a negative integer, got {c}")


def euler_apply(p: Polynomial, c) -> Polynomial:
    """Scale each homogeneous part of degree k by (c + k)."""
    c = as_fraction(c)
    out = Polynomial.zero(p.dim)
    for degree, part in p.homogeneous_parts():
        out = out + part * (c + degree)
    return out


def euler_inverse(p: Polynomial, c) -> Polynomial:
    """The exact inverse of :func:`euler_apply`; needs c + k != 0 for all k."""
    c = as_fraction(c)
    _check_c(c)
    out = Polynomial.zero(p.dim)
    for degree, part in p.homogeneous_parts():
        out = out + part * (1 / (c + degree))
    return out


def euler_operator(dim: int, c) -> FirstOrderOperator:
    """E_c as a FirstOrderOperator (cross-module consistency surface)."""
    return FirstOrderOperator.euler(dim) + as_fraction(c)


@dataclass(frozen=True)
class EulerBounds:
    N: int
    xi: Fraction
    c: Fraction
    inf_ratio: Fraction
    sup_ratio: Fraction
    inf_attained_at: int | None  # None means the k -> infinity limit
    sup_attained_at: int | None

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "xi": format_fraction(self.xi),
            "c": format_fraction(self.c),
            "inf_ratio": format_fraction(self.inf_ratio),
            "sup_ratio": format_fraction(self.sup_ratio),
            "inf_attained_at": self.inf_attained_at,
            "sup_attained_at": self.sup_attained_at,
        }


def norm_ratio(N: int, xi: Fraction, c: Fraction, k: int) -> Fraction:
    """r(k) = ||E_c z^beta||^2_{xi+2} / ||z^beta||^2_xi for |beta| = k."""
    A = N + xi + 1
    return (c + k) ** 2 * A * (A + 1) / ((A + k) * (A + 1 + k))


def euler_bounds(N: int, xi, c) -> EulerBounds:
    """Exact infimum and supremum of r(k) over k in {0, 1, 2, ...}.

    The forward difference r(k+1) - r(k) has sign given by the linear function
    n(k) = (2(A-c)+1) k + 2c(A-c) + A with A = N+xi+1, so r is monotone on
    each side of a single rational turning point.  Extremes are found among
    k = 0, the integers bracketing the turning point, and the limit value
    A(A+1) with attainment flags set accordingly.
    """
    xi = as_fraction(xi)
    c = as_fraction(c)
    if xi <= -1:
        raise ValueError(f"weight parameter must satisfy xi > -1, got {xi}")
    _check_c(c)
    A = N + xi + 1
    limit = A * (A + 1)

    slope = 2 * (A - c) + 1
    intercept = 2 * c * (A - c) + A
    candidates = {0}
    if slope != 0:
        turn = -intercept / slope
        if turn > 0:
            lo = int(turn)  # floor for positive rationals
            candidates.update(k for k in (lo, lo + 1, lo + 2) if k >= 0)
    # sign of n(k) for large k decides the tail direction
    tail_increasing = slope > 0 or (slope == 0 and intercept > 0)

    values = {k: norm_ratio(N, xi, c, k) for k in sorted(candidates)}
    head_min_k = min(values, key=lambda k: (values[k], k))
    head_max_k = min(values, key=lambda k: (-values[k], k))
    head_min, head_max = values[head_min_k], values[head_max_k]

    if tail_increasing:
        # tail climbs to the limit from below
        inf_ratio, inf_at = head_min, head_min_k
        if limit > head_max:
            sup_ratio, sup_at = limit, None
        else:
            sup_ratio, sup_at = head_max, head_max_k
    else:
        # tail descends to the limit from above
        sup_ratio, sup_at = head_max, head_max_k
        if limit < head_min:
            inf_ratio, inf_at = limit, None
        else:
            inf_ratio, inf_at = head_min, head_min_k
    return EulerBounds(
        N=N, xi=xi, c=c,
        inf_ratio=inf_ratio, sup_ratio=sup_ratio,
        inf_attained_at=inf_at, sup_attained_at=sup_at,
    )


def euler_norm_check(space: BallSpace, p: Polynomial, c) -> tuple[Fraction, tuple[Fraction, Fraction]]:
    """Exact ||E_c p||^2 in the shifted space and the two-sided bound around it.

    Returns (lhs, (lo, hi)) and asserts lo <= lhs <= hi, which is the
    finite-expansion form of the homeomorphism bound.
    """
    c = as_fraction(c)
    _check_c(c)
    shifted = BallSpace(space.N, space.xi + 2)
    Ep = euler_apply(p, c)
    lhs = shifted.ip(Ep, Ep).coefficient.as_real()
    bounds = euler_bounds(space.N, space.xi, c)
    base = space.ip(p, p).coefficient.as_real()
    lo = bounds.inf_ratio * base
    hi = bounds.sup_ratio * base
    if not (lo <= lhs <= hi):
        raise AssertionError(
            f"two-sided Euler bound violated: {lo} <= {lhs} <= {hi} fails"
        )
    return lhs, (lo, hi)
