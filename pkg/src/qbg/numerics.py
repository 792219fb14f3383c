"""Dense complex linear-algebra primitives for small matrices."""

import numpy as np

from .errors import LengthMismatch, NotHermitian

DEFAULT_HERM_TOL = 1e-10


def hermiticity_deviation(m):
    """Max entrywise |m - m^dagger|."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def hermitian_eigenvalues(m, herm_tol=DEFAULT_HERM_TOL):
    """Eigenvalues of a Hermitian matrix, sorted descending.

    Raises NotHermitian if the entrywise deviation from m^dagger exceeds
    herm_tol.
    """
    m = np.asarray(m, dtype=complex)
    dev = hermiticity_deviation(m)
    if dev > herm_tol:
        raise NotHermitian(dev, herm_tol)
    return np.linalg.eigvalsh(m)[::-1]


def trace_norm(m):
    """Sum of singular values; for Hermitian input the sum of |eigenvalues|."""
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0.0
    return float(np.sum(np.linalg.svd(m, compute_uv=False)))


def majorizes(a, b, tol=1e-10):
    """True iff the descending vector a majorizes b.

    Every prefix sum of a must dominate the corresponding prefix sum of b
    within tol, and the total sums must agree within tol. Both inputs are
    assumed sorted descending.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise LengthMismatch(f"shape mismatch: {a.shape} vs {b.shape}")
    ca = np.cumsum(a)
    cb = np.cumsum(b)
    if abs(ca[-1] - cb[-1]) > tol:
        return False
    return bool(np.all(ca >= cb - tol))
