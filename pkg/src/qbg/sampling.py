"""Seeded random-state generation, coordinate clouds, empirical boundary
estimation, and the spectral checks behind the linear bound's proof chain.

Randomness is counter-based: record i of a run with seed s draws from a
Philox stream keyed by (s, i), so any partition of the index range across
workers reproduces the serial output exactly. Gaussians come from
Box-Muller on the raw uniform stream to keep results stable across
platforms and library versions.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.random import Generator, Philox

from . import bounds, extremal, state, transform
from .errors import OutOfRange
from .numerics import majorizes

HAAR_PURE = "HAAR_PURE"
HS_MIXED = "HS_MIXED"
MEASURES = (HAAR_PURE, HS_MIXED)

PROOF_TOL = 1e-9


@dataclass(frozen=True)
class CoordinateRecord:
    dim: int
    seed_index: int
    s_d: float
    s_x: float
    s_i: float
    s_r: float
    purity: float


@dataclass(frozen=True)
class ProofStepReport:
    """Spectral facts behind the linear bound: the imaginary part's
    eigenvalues pair to +/-, the real part dominates them entrywise in the
    imaginary eigenbasis, its diagonal there is majorized by its spectrum,
    and its smallest eigenvalue t obeys t >= 1 - sqrt(d-1) s_r."""

    lambda_i: np.ndarray
    lambda_r: np.ndarray
    r_tilde_diag: np.ndarray
    t: float
    pairing_ok: bool
    domination_ok: bool
    majorization_ok: bool
    t_bound_ok: bool

    @property
    def all_ok(self):
        return (
            self.pairing_ok
            and self.domination_ok
            and self.majorization_ok
            and self.t_bound_ok
        )


def record_stream(seed, index):
    """The Philox stream for record `index` of a run keyed by `seed`."""
    if seed < 0 or index < 0:
        raise OutOfRange("seed and record index must be nonnegative")
    return Generator(Philox(key=np.array([seed, index], dtype=np.uint64)))


def _normals(rng, n):
    # Box-Muller on raw uniforms; 1 - u maps [0, 1) to (0, 1] for the log
    m = (n + 1) // 2
    u1 = 1.0 - rng.random(m)
    u2 = rng.random(m)
    r = np.sqrt(-2.0 * np.log(u1))
    z = np.concatenate([r * np.cos(2.0 * np.pi * u2), r * np.sin(2.0 * np.pi * u2)])
    return z[:n]


def _haar_pure_matrix(d, rng):
    z = _normals(rng, 2 * d)
    psi = z[:d] + 1j * z[d:]
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def _hs_mixed_matrix(d, rng):
    z = _normals(rng, 2 * d * d)
    g = (z[: d * d] + 1j * z[d * d :]).reshape(d, d)
    w = g @ g.conj().T
    return w / np.trace(w).real


def haar_pure(d, seed, index=0):
    """Projector onto a Haar-random unit vector; deterministic per
    (seed, index)."""
    if d < 2:
        raise OutOfRange(f"dimension must be >= 2, got {d}")
    m = _haar_pure_matrix(d, record_stream(seed, index))
    return state.validate_density(m)


def hs_mixed(d, seed, index=0):
    """Trace-normalized G G^dagger with G a complex Gaussian matrix
    (Hilbert-Schmidt measure); deterministic per (seed, index)."""
    if d < 2:
        raise OutOfRange(f"dimension must be >= 2, got {d}")
    m = _hs_mixed_matrix(d, record_stream(seed, index))
    return state.validate_density(m)


def _sample_matrix(d, measure, seed, index):
    rng = record_stream(seed, index)
    if measure == HAAR_PURE:
        return _haar_pure_matrix(d, rng)
    if measure == HS_MIXED:
        return _hs_mixed_matrix(d, rng)
    raise OutOfRange(f"unknown measure {measure!r}")


def _coords_of_matrix(m, d):
    """(s_d, s_x, s_i, s_r, purity) straight from the entries."""
    dg = np.real(np.diag(m))
    s_d2 = float(np.sum((d * dg - 1.0) ** 2)) / d
    off = m - np.diag(dg)
    s_x2 = d * float(np.sum(off.real**2))
    s_i2 = d * float(np.sum(off.imag**2))
    pur = float(np.sum(np.abs(m) ** 2))
    return (
        float(np.sqrt(s_d2)),
        float(np.sqrt(s_x2)),
        float(np.sqrt(s_i2)),
        float(np.sqrt(s_d2 + s_x2)),
        pur,
    )


def _make_record(d, measure, seed, index):
    m = _sample_matrix(d, measure, seed, index)
    s_d, s_x, s_i, s_r, pur = _coords_of_matrix(m, d)
    return CoordinateRecord(
        dim=d, seed_index=index, s_d=s_d, s_x=s_x, s_i=s_i, s_r=s_r, purity=pur
    )


def iter_coordinate_cloud(d, n, measure, seed, workers=1):
    """Yield n CoordinateRecords in index order.

    The output is identical for any worker count: each record depends only
    on (seed, index).
    """
    if n < 1:
        raise OutOfRange(f"need at least one record, got n={n}")
    if measure not in MEASURES:
        raise OutOfRange(f"unknown measure {measure!r}")
    if d < 2:
        raise OutOfRange(f"dimension must be >= 2, got {d}")
    if workers <= 1:
        for i in range(n):
            yield _make_record(d, measure, seed, i)
        return
    chunk = max(1, (n + workers - 1) // workers)
    ranges = [range(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]

    def run(rg):
        return [_make_record(d, measure, seed, i) for i in rg]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(run, ranges):
            yield from part


def coordinate_cloud(d, n, measure, seed, workers=1):
    """All n records as a list; see iter_coordinate_cloud."""
    return list(iter_coordinate_cloud(d, n, measure, seed, workers=workers))


@dataclass(frozen=True)
class EmpiricalBoundary:
    dim: int
    bin_centers: np.ndarray
    s_i_max: np.ndarray  # NaN where a bin received no samples


def _refinement_anchors(d):
    """Extremal-family states seeding the boundary refinement."""
    anchors = []
    for beta in np.linspace(0.0, 1.0, 21):
        anchors.append(extremal.embedded_imag_pure(d, beta))
    ladder = [1.0, 0.7, 0.5, 0.3, 0.15, 0.05]
    if d % 2 == 0:
        m = d // 2
        for p in ladder:
            w = p ** np.arange(m)
            anchors.append(extremal.even_block(w / (2.0 * w.sum())))
    else:
        for alpha in np.linspace(1.0 / d, 1.0 / (d - 1), 11):
            anchors.append(extremal.odd_linear(d, alpha))
        m = (d - 1) // 2
        for p in ladder:
            w = p ** np.arange(m)
            anchors.append(extremal.odd_block_zero(w / (2.0 * w.sum())))
    return anchors


def empirical_boundary(d, bins, n, seed, refine=False):
    """Per-bin maximum of sampled s_i over [0, sqrt(d-1)].

    Half the samples are Hilbert-Schmidt mixed, half Haar pure. With
    refine=True, extremal-family anchors and short random walks along their
    real-orthogonal orbits (which keep (s_r, s_i) fixed) are added, pinning
    the curve to the boundary at the anchor coordinates.
    """
    if bins < 2:
        raise OutOfRange(f"need at least 2 bins, got {bins}")
    r_max = float(np.sqrt(d - 1.0))
    edges = np.linspace(0.0, r_max, bins + 1)
    centers = 0.5 * (edges[:-1] + edges[1:])
    best = np.full(bins, np.nan)

    def feed(s_r, s_i):
        b = min(int(s_r / r_max * bins), bins - 1)
        if not (best[b] >= s_i):
            best[b] = s_i

    n_mixed = n // 2
    for rec in iter_coordinate_cloud(d, max(n - n_mixed, 1), HAAR_PURE, seed):
        feed(rec.s_r, rec.s_i)
    if n_mixed >= 1:
        for rec in iter_coordinate_cloud(d, n_mixed, HS_MIXED, seed):
            feed(rec.s_r, rec.s_i)

    if refine:
        ladder = 10.0 ** -np.arange(1, 7)
        for a_idx, anchor in enumerate(_refinement_anchors(d)):
            rng = record_stream(seed, n + a_idx)
            c = state.state_coordinates(anchor)
            feed(c.s_r, c.s_i)
            rho = anchor
            for _ in range(200):
                k = int(rng.integers(0, d))
                l = int(rng.integers(0, d - 1))
                if l >= k:
                    l += 1
                mag = float(ladder[int(rng.integers(0, len(ladder)))])
                theta = mag if rng.random() < 0.5 else -mag
                rho = transform.givens_conjugate(
                    rho, transform.RotationStep(k=k, l=l, theta=theta)
                )
                c = state.state_coordinates(rho)
                feed(c.s_r, c.s_i)

    return EmpiricalBoundary(dim=d, bin_centers=centers, s_i_max=best)


def proof_step_check(rho, tol=PROOF_TOL):
    """Spectral checks on the real/imaginary split R = d(rho+rho^T)/2,
    I = d(rho-rho^T)/2 underlying the linear bound."""
    d = rho.dim
    m = rho.entries
    r_mat = d * (m + m.T) / 2.0
    i_mat = d * (m - m.T) / 2.0

    lam_i_asc, u = np.linalg.eigh(i_mat)
    lam_i = lam_i_asc[::-1]
    u = u[:, ::-1]
    lam_r = np.linalg.eigvalsh(r_mat)[::-1]
    r_tilde_diag = np.real(np.diag(u.conj().T @ r_mat @ u))

    pairing_ok = bool(np.all(np.abs(lam_i + lam_i[::-1]) <= tol))
    domination_ok = bool(np.all(r_tilde_diag >= np.abs(lam_i) - tol))
    majorization_ok = majorizes(lam_r, np.sort(r_tilde_diag)[::-1], tol=tol)
    t = float(lam_r[-1])
    s_r = state.state_coordinates(rho).s_r
    t_bound_ok = bool(t >= 1.0 - np.sqrt(d - 1.0) * s_r - tol)

    return ProofStepReport(
        lambda_i=lam_i,
        lambda_r=lam_r,
        r_tilde_diag=r_tilde_diag,
        t=t,
        pairing_ok=pairing_ok,
        domination_ok=domination_ok,
        majorization_ok=majorization_ok,
        t_bound_ok=t_bound_ok,
    )
