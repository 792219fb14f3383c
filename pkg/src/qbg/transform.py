"""Real-orthogonal conjugations, the diagonal-flattening sweep, and
transposition.

Conjugation by a real orthogonal matrix shifts weight between the diagonal
and real off-diagonal parts while leaving both s_r and s_i unchanged; the
sweep exploits this to drive every diagonal entry to 1/d.
"""

from dataclasses import dataclass

import numpy as np

from . import state
from .errors import ConvergenceFailure, IndexOutOfRange

DEFAULT_DIAG_TOL = 1e-8
_BISECT_TOL = 1e-12
_BISECT_MAX_ITER = 200


@dataclass(frozen=True)
class RotationStep:
    """A planar rotation by theta radians in the (k, l) coordinate plane."""

    k: int
    l: int
    theta: float


def _rotation_matrix(d, step):
    if step.k == step.l:
        raise IndexOutOfRange(f"rotation plane indices must differ, got {step.k}")
    for idx in (step.k, step.l):
        if not 0 <= idx < d:
            raise IndexOutOfRange(f"index {idx} outside [0, {d})")
    o = np.eye(d)
    c, s = np.cos(step.theta), np.sin(step.theta)
    o[step.k, step.k] = c
    o[step.l, step.l] = c
    o[step.k, step.l] = s
    o[step.l, step.k] = -s
    return o


def givens_conjugate(rho, step):
    """rho' = O rho O^T for the planar rotation O of the step."""
    o = _rotation_matrix(rho.dim, step)
    m = o @ rho.entries @ o.T
    # exact symmetrization noise only; revalidate with the state's tolerances
    return state.validate_density(m, rho.tolerances)


def apply_steps(rho, steps):
    """Replay a rotation-step log in order."""
    for step in steps:
        rho = givens_conjugate(rho, step)
    return rho


def _rotated_diag_entry(m, k, l, theta):
    # closed form for (O m O^T)_kk; depends only on the (k, l) principal block
    c, s = np.cos(theta), np.sin(theta)
    return (
        c * c * m[k, k].real
        + s * s * m[l, l].real
        + 2.0 * c * s * m[k, l].real
    )


def _solve_theta(m, k, l, target):
    """Bisect theta in [0, pi/2] so the rotated (k, k) entry hits target.

    Requires m[k, k] >= target >= m[l, l]; the entry moves continuously from
    m[k, k] at theta=0 to m[l, l] at theta=pi/2.
    """
    lo, hi = 0.0, np.pi / 2.0
    f_lo = m[k, k].real - target
    theta = lo
    for _ in range(_BISECT_MAX_ITER):
        theta = 0.5 * (lo + hi)
        f_mid = _rotated_diag_entry(m, k, l, theta) - target
        if abs(f_mid) <= _BISECT_TOL:
            return theta
        if (f_mid > 0) == (f_lo > 0):
            lo = theta
            f_lo = f_mid
        else:
            hi = theta
    return theta


def sweep_uniform_diagonal(rho, diag_tol=DEFAULT_DIAG_TOL):
    """Rotate until every diagonal entry equals 1/d within diag_tol.

    Each iteration picks the extreme diagonal entries (lowest index wins
    ties), rotates their plane so the larger one lands exactly on 1/d, and
    logs the step. s_r and s_i are untouched throughout; weight moves from
    the diagonal part to the real off-diagonal part. Returns the swept state
    and the replayable step log.
    """
    d = rho.dim
    target = 1.0 / d
    m = np.array(rho.entries, dtype=complex)
    steps = []
    max_steps = 4 * d * d
    for _ in range(max_steps):
        diag = np.real(np.diag(m))
        dev = diag - target
        if np.max(np.abs(dev)) <= diag_tol:
            out = state.validate_density(m, rho.tolerances)
            return out, steps
        k = int(np.argmax(dev))   # lowest index wins ties
        l = int(np.argmin(dev))
        theta = _solve_theta(m, k, l, target)
        step = RotationStep(k=k, l=l, theta=theta)
        o = _rotation_matrix(d, step)
        m = o @ m @ o.T
        steps.append(step)
    residual = float(np.max(np.abs(np.real(np.diag(m)) - target)))
    raise ConvergenceFailure(residual, max_steps)


def transpose_state(rho):
    """Entrywise transpose; flips the sign of the imaginary part only."""
    return state.validate_density(rho.entries.T, rho.tolerances)
