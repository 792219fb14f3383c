"""Density-matrix validation, the diagonal/real/imaginary split, and Bloch
coordinates.

Every state of dimension d is written as

    rho = (1/d) (identity + D + X + I)

with D a real traceless diagonal part, X a real symmetric off-diagonal part
and I a purely imaginary Hermitian off-diagonal part. The weights

    s_d = sqrt(Tr D^2 / d),  s_x = sqrt(Tr X^2 / d),  s_i = sqrt(Tr I^2 / d)

coarse-grain the Bloch vector; s_r = sqrt(s_d^2 + s_x^2) bundles the two
real weights.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotPositive, TraceNotOne

DEFAULT_HERM_TOL = 1e-10
DEFAULT_TRACE_TOL = 1e-10
DEFAULT_PSD_TOL = 1e-9


@dataclass(frozen=True)
class Tolerances:
    """Validation tolerances recorded alongside each accepted state."""

    herm_tol: float = DEFAULT_HERM_TOL
    trace_tol: float = DEFAULT_TRACE_TOL
    psd_tol: float = DEFAULT_PSD_TOL


DEFAULT_TOLERANCES = Tolerances()


def _readonly(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class DensityMatrix:
    """A validated unit-trace positive-semidefinite Hermitian matrix."""

    dim: int
    entries: np.ndarray
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES, compare=False)


@dataclass(frozen=True)
class DxiParts:
    """The split of a state into diagonal, real off-diagonal and imaginary
    off-diagonal parts (each traceless and mutually orthogonal)."""

    dim: int
    diag: np.ndarray      # real, length d, sums to 0
    real_off: np.ndarray  # real symmetric d x d, zero diagonal
    imag_off: np.ndarray  # purely imaginary Hermitian d x d, zero diagonal


@dataclass(frozen=True)
class Coordinates:
    """Hilbert-Schmidt weights of the three parts plus the bundled real
    weight s_r = sqrt(s_d^2 + s_x^2)."""

    dim: int
    s_d: float
    s_x: float
    s_i: float
    s_r: float


@dataclass(frozen=True)
class BlochBasis:
    """Traceless Hermitian basis with Tr(mu_k mu_l^dagger) = d delta_kl.

    Ordering: the d-1 diagonal ladder elements first, then the d(d-1)/2 real
    symmetric pair elements (k<l lexicographic), then the d(d-1)/2 imaginary
    antisymmetric pair elements in the same order.
    """

    dim: int
    diagonal: tuple
    symmetric: tuple
    antisymmetric: tuple

    def elements(self):
        return self.diagonal + self.symmetric + self.antisymmetric


@dataclass(frozen=True)
class BlochVector:
    """Expansion coefficients v_k = <mu_k> grouped by basis sector."""

    dim: int
    v_d: np.ndarray
    v_x: np.ndarray
    v_i: np.ndarray


def validate_density(raw, tolerances=DEFAULT_TOLERANCES):
    """Check Hermiticity, unit trace and positivity; return a DensityMatrix.

    Raises NotHermitian / TraceNotOne / NotPositive naming the violated
    invariant and the measured violation.
    """
    m = np.asarray(raw, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    d = m.shape[0]
    if d < 2:
        raise DimensionMismatch("dimension must be at least 2")
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > tolerances.herm_tol:
        raise NotHermitian(dev, tolerances.herm_tol)
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > tolerances.trace_tol:
        raise TraceNotOne(tr, tolerances.trace_tol)
    lam_min = float(np.linalg.eigvalsh(m)[0])
    if lam_min < -tolerances.psd_tol:
        raise NotPositive(lam_min, tolerances.psd_tol)
    return DensityMatrix(dim=d, entries=_readonly(m), tolerances=tolerances)


def decompose(rho):
    """Split a state into its diagonal, real off-diagonal and imaginary
    off-diagonal parts: diag_k = d rho_kk - 1, real_off = d Re(rho) off the
    diagonal, imag_off = i d Im(rho)."""
    d = rho.dim
    m = rho.entries
    diag = d * np.real(np.diag(m)) - 1.0
    off_mask = ~np.eye(d, dtype=bool)
    real_off = np.where(off_mask, d * m.real, 0.0)
    imag_off = np.where(off_mask, 1j * d * m.imag, 0.0)
    return DxiParts(
        dim=d,
        diag=_readonly(diag),
        real_off=_readonly(real_off),
        imag_off=_readonly(imag_off),
    )


def recompose(parts, tolerances=DEFAULT_TOLERANCES):
    """Rebuild (1/d)(identity + D + X + I) and validate it.

    Part triples need not correspond to a state; an infeasible triple
    surfaces as NotPositive.
    """
    d = parts.dim
    m = (np.eye(d) + np.diag(parts.diag) + parts.real_off + parts.imag_off) / d
    return validate_density(m, tolerances)


def coordinates(parts):
    """Hilbert-Schmidt weights (s_d, s_x, s_i) of the three parts."""
    d = parts.dim
    s_d2 = float(np.sum(parts.diag**2)) / d
    s_x2 = float(np.sum(parts.real_off.real**2)) / d
    s_i2 = float(np.sum(parts.imag_off.imag**2)) / d
    return Coordinates(
        dim=d,
        s_d=np.sqrt(s_d2),
        s_x=np.sqrt(s_x2),
        s_i=np.sqrt(s_i2),
        s_r=np.sqrt(s_d2 + s_x2),
    )


def state_coordinates(rho):
    """Shorthand for coordinates(decompose(rho))."""
    return coordinates(decompose(rho))


def purity(rho):
    """Tr rho^2; equals (1 + s_d^2 + s_x^2 + s_i^2)/d."""
    return float(np.sum(np.abs(rho.entries) ** 2))


def gellmann_basis(d):
    """Generalized Gell-Mann basis rescaled to Tr(mu_k mu_l^dagger) = d delta_kl.

    For d=2 this is exactly the Pauli triple (sigma_z; sigma_x; sigma_y).
    """
    if d < 2:
        raise DimensionMismatch("dimension must be at least 2")
    scale = np.sqrt(d / 2.0)
    diagonal = []
    for m in range(1, d):
        h = np.zeros((d, d), dtype=complex)
        for j in range(m):
            h[j, j] = 1.0
        h[m, m] = -m
        h *= np.sqrt(2.0 / (m * (m + 1)))
        diagonal.append(_readonly(scale * h))
    symmetric = []
    antisymmetric = []
    for k in range(d):
        for l in range(k + 1, d):
            s = np.zeros((d, d), dtype=complex)
            s[k, l] = 1.0
            s[l, k] = 1.0
            symmetric.append(_readonly(scale * s))
            a = np.zeros((d, d), dtype=complex)
            a[k, l] = -1j
            a[l, k] = 1j
            antisymmetric.append(_readonly(scale * a))
    return BlochBasis(
        dim=d,
        diagonal=tuple(diagonal),
        symmetric=tuple(symmetric),
        antisymmetric=tuple(antisymmetric),
    )


def bloch_vector(rho, basis):
    """Expansion coefficients v_k = Tr(rho mu_k) in the given basis."""
    if rho.dim != basis.dim:
        raise DimensionMismatch(
            f"state dimension {rho.dim} does not match basis dimension {basis.dim}"
        )
    m = rho.entries

    def expect(mu):
        return float(np.real(np.trace(m @ mu)))

    return BlochVector(
        dim=rho.dim,
        v_d=_readonly(np.array([expect(mu) for mu in basis.diagonal])),
        v_x=_readonly(np.array([expect(mu) for mu in basis.symmetric])),
        v_i=_readonly(np.array([expect(mu) for mu in basis.antisymmetric])),
    )


def state_from_bloch(v, basis, tolerances=DEFAULT_TOLERANCES):
    """Rebuild (1/d)(identity + sum_k v_k mu_k) and validate it.

    A vector outside the state body surfaces as NotPositive.
    """
    if v.dim != basis.dim:
        raise DimensionMismatch(
            f"vector dimension {v.dim} does not match basis dimension {basis.dim}"
        )
    d = basis.dim
    m = np.eye(d, dtype=complex)
    for coeff, mu in zip(v.v_d, basis.diagonal):
        m += coeff * mu
    for coeff, mu in zip(v.v_x, basis.symmetric):
        m += coeff * mu
    for coeff, mu in zip(v.v_i, basis.antisymmetric):
        m += coeff * mu
    return validate_density(m / d, tolerances)
