"""Numeric change of variables for the 2x2 matrix ball.

Splitting Z = [V | W] by columns, T = I - V V* has eigenvalues
lambda = 1 - |z1|^2 - |z3|^2 and 1, with an explicit unitary diagonalizer.
Substituting W = sqrt(T) W1 reduces integration over the matrix ball to two
copies of the C^2 ball; this module provides the decomposition and the
determinant identity det(I - Z*Z) = (1 - V*V)(1 - W1*W1) as numeric checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MatrixBallDecomposition:
    V: np.ndarray        # first column (z1, z3)
    lam: float           # 1 - |z1|^2 - |z3|^2
    T: np.ndarray        # I - V V*
    U: np.ndarray        # unitary with T = U D U*
    D: np.ndarray        # diag(1, lam)
    sqrtT: np.ndarray    # Hermitian square root of T


def matrix_ball_decompose(V) -> MatrixBallDecomposition:
    """Diagonalize T = I - V V* for a point V strictly inside the C^2 ball."""
    V = np.asarray(V, dtype=complex).reshape(2)
    s = float(np.abs(V[0]) ** 2 + np.abs(V[1]) ** 2)
    if s >= 1.0:
        raise ValueError(f"V must lie strictly inside the unit ball, |V|^2 = {s}")
    lam = 1.0 - s
    T = np.eye(2, dtype=complex) - np.outer(V, V.conj())
    if s == 0.0:
        # T = I; any unitary diagonalizes it, the identity is the convention
        U = np.eye(2, dtype=complex)
    else:
        root = np.sqrt(s)
        # columns: the eigenvector for eigenvalue 1, then the one for lambda
        U = np.array(
            [[-np.conj(V[1]) / root, V[0] / root],
             [np.conj(V[0]) / root, V[1] / root]]
        )
    D = np.diag([1.0, lam]).astype(complex)
    sqrtT = U @ np.diag([1.0, np.sqrt(lam)]).astype(complex) @ U.conj().T
    return MatrixBallDecomposition(V=V, lam=lam, T=T, U=U, D=D, sqrtT=sqrtT)


def inside_matrix_ball(Z: np.ndarray) -> bool:
    """True when I - Z*Z is positive definite."""
    Z = np.asarray(Z, dtype=complex).reshape(2, 2)
    H = np.eye(2) - Z.conj().T @ Z
    eigs = np.linalg.eigvalsh(H)
    return bool(np.all(eigs > 0))


def det_identity_check(Z) -> float:
    """|det(I - Z*Z) - (1 - V*V)(1 - W1*W1)| with W1 = sqrt(T)^(-1) W."""
    Z = np.asarray(Z, dtype=complex).reshape(2, 2)
    if not inside_matrix_ball(Z):
        raise ValueError("Z is not inside the matrix ball (I - Z*Z not positive definite)")
    V = Z[:, 0]
    W = Z[:, 1]
    dec = matrix_ball_decompose(V)
    W1 = np.linalg.solve(dec.sqrtT, W)
    lhs = np.linalg.det(np.eye(2) - Z.conj().T @ Z).real
    rhs = (1.0 - float(np.vdot(V, V).real)) * (1.0 - float(np.vdot(W1, W1).real))
    return abs(lhs - rhs)
