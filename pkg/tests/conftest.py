"""Shared oracles and random-object helpers for the test suite.

The matrix-exponential oracle here deliberately avoids eigendecompositions
so it stays independent of the code path it checks.
"""

import numpy as np


def taylor_expm(h, t, order=30, squarings=8):
    """exp(-i h t) by order-``order`` Taylor series with scaling and squaring."""
    h = np.asarray(h, dtype=complex)
    x = (-1j * t / 2**squarings) * h
    acc = np.eye(h.shape[0], dtype=complex)
    term = np.eye(h.shape[0], dtype=complex)
    for k in range(1, order + 1):
        term = term @ x / k
        acc = acc + term
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def random_hermitian(rng, dim, scale=1.0):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (a + a.conj().T) / 2


def random_unitary(rng, dim):
    """Haar-distributed unitary via QR with the R-diagonal phase fix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_su2(rng):
    """Haar-distributed SU(2) matrix (unit determinant)."""
    z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    z /= np.linalg.norm(z)
    return np.array([[z[0], -np.conj(z[1])], [z[1], np.conj(z[0])]])
