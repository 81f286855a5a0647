"""Monte-Carlo cross-check of the exact monomial inner products.

Samples are drawn by rejection from the bounding polydisc with a Philox
(counter-based) generator, so a fixed (seed, samples) pair always reproduces
the same estimate bit for bit regardless of how the batches are scheduled.

The estimates target the *unnormalized* integral in each domain's measure
convention: the probability measure on the ball (so <1,1> estimates 1) and
plain Lebesgue measure with weight det(I - Z*Z)^xi on the matrix ball (so
values are comparable to pi^4 times the exact coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .poly import MultiIndex
from .spaces import BallSpace, BergmanSpace, MatrixBallSpace

_BATCH = 1 << 17


@dataclass(frozen=True)
class OracleEstimate:
    estimate: complex
    stderr: float
    samples: int
    seed: int

    def to_json(self) -> dict:
        return {
            "estimate_re": self.estimate.real,
            "estimate_im": self.estimate.imag,
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
        }


def _polydisc_samples(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """Uniform samples on the unit polydisc, one row per sample."""
    u = rng.random((count, dim))
    theta = rng.random((count, dim)) * (2.0 * np.pi)
    return np.sqrt(u) * np.exp(1j * theta)


def numeric_ip_oracle(
    space: BergmanSpace, n: MultiIndex, m: MultiIndex, samples: int, seed: int
) -> OracleEstimate:
    """Unbiased MC estimate of the monomial inner product with standard error."""
    if samples <= 0:
        raise ValueError("samples must be positive")
    n = tuple(n)
    m = tuple(m)
    if len(n) != space.dim or len(m) != space.dim:
        raise ValueError(f"indices must have length {space.dim}")
    xi = float(space.xi)
    rng = np.random.Generator(np.random.Philox(key=seed))

    total = 0.0 + 0.0j
    total_sq = 0.0 + 0.0j  # componentwise sums of squares (re, im)
    done = 0
    while done < samples:
        count = min(_BATCH, samples - done)
        Z = _polydisc_samples(rng, count, space.dim)
        if isinstance(space, BallSpace):
            values = _ball_integrand(space, Z, n, m, xi)
        else:
            values = _mball_integrand(space, Z, n, m, xi)
        total += values.sum()
        total_sq += (values.real ** 2).sum() + 1j * (values.imag ** 2).sum()
        done += count

    mean = total / samples
    var_re = max(total_sq.real / samples - mean.real ** 2, 0.0)
    var_im = max(total_sq.imag / samples - mean.imag ** 2, 0.0)
    stderr = float(np.sqrt((var_re + var_im) / samples))
    return OracleEstimate(estimate=complex(mean), stderr=stderr, samples=samples, seed=seed)


def _monomial_values(Z: np.ndarray, n: MultiIndex, m: MultiIndex) -> np.ndarray:
    out = np.ones(Z.shape[0], dtype=complex)
    for j, (en, em) in enumerate(zip(n, m)):
        if en:
            out *= Z[:, j] ** en
        if em:
            out *= np.conj(Z[:, j]) ** em
    return out


def _ball_integrand(space: BallSpace, Z: np.ndarray, n, m, xi: float) -> np.ndarray:
    # probability measure: prod_{j<=N} (xi + j) * (1 - |z|^2)^xi on the ball
    norm2 = (np.abs(Z) ** 2).sum(axis=1)
    inside = norm2 < 1.0
    weight = np.where(inside, np.where(inside, 1.0 - norm2, 1.0) ** xi, 0.0)
    const = 1.0
    for j in range(1, space.N + 1):
        const *= float(space.xi + j)
    return const * _monomial_values(Z, n, m) * weight


def _mball_integrand(space: MatrixBallSpace, Z: np.ndarray, n, m, xi: float) -> np.ndarray:
    # Lebesgue measure: pi^4 * E[f * det(I - Z*Z)^xi * 1_domain] over the polydisc
    z1, z2, z3, z4 = Z[:, 0], Z[:, 1], Z[:, 2], Z[:, 3]
    h11 = 1.0 - np.abs(z1) ** 2 - np.abs(z3) ** 2
    h22 = 1.0 - np.abs(z2) ** 2 - np.abs(z4) ** 2
    h12 = -(np.conj(z1) * z2 + np.conj(z3) * z4)
    det = h11 * h22 - np.abs(h12) ** 2
    inside = (h11 > 0.0) & (det > 0.0)
    weight = np.where(inside, np.where(inside, det, 1.0) ** xi, 0.0)
    return (np.pi ** 4) * _monomial_values(Z, n, m) * weight
