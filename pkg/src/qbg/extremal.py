"""Boundary-saturating state families.

Four constructions: 2x2 imaginary blocks for even dimension (saturate the
quadratic bound), the same blocks plus a trailing zero for odd dimension,
the uniform-block family with a free trailing diagonal entry for odd
dimension (saturates the linear bound), and rank-1 projectors onto
two-level superpositions with an imaginary relative amplitude (saturate the
purity bound).
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import bounds, state
from .errors import SpecViolation

EVEN_BLOCK = "EVEN_BLOCK"
ODD_BLOCK_ZERO = "ODD_BLOCK_ZERO"
ODD_LINEAR = "ODD_LINEAR"
EMBEDDED_IMAG_PURE = "EMBEDDED_IMAG_PURE"
FAMILIES = (EVEN_BLOCK, ODD_BLOCK_ZERO, ODD_LINEAR, EMBEDDED_IMAG_PURE)

TRACE_TOL = 1e-12


@dataclass(frozen=True)
class ExtremalSpec:
    """Parameters selecting one member of one family."""

    family: str
    dim: int
    alphas: Optional[tuple] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None


@dataclass(frozen=True)
class SaturationReport:
    verdict: bounds.BoundVerdict
    coords: state.Coordinates
    landmark_distances: dict  # landmark name -> Euclidean distance in (s_r, s_i)


def _imag_blocks(alphas, d):
    """Block-diagonal matrix of 2x2 blocks [[a, -i a], [i a, a]]."""
    m = np.zeros((d, d), dtype=complex)
    for k, a in enumerate(alphas):
        i = 2 * k
        m[i, i] = a
        m[i + 1, i + 1] = a
        m[i, i + 1] = -1j * a
        m[i + 1, i] = 1j * a
    return m


def _check_block_weights(alphas):
    alphas = tuple(float(a) for a in alphas)
    if any(a < 0 for a in alphas):
        raise SpecViolation(f"block weights must be nonnegative, got {alphas}")
    total = 2.0 * sum(alphas)
    if abs(total - 1.0) > TRACE_TOL:
        raise SpecViolation(
            f"block weights must satisfy 2*sum(alphas) = 1, got {total!r}"
        )
    return alphas


def even_block(alphas):
    """Even-dimension block state; saturates the quadratic bound exactly.

    d = 2*len(alphas); weights must be nonnegative with 2*sum = 1. Zero
    weights are allowed (they contribute zero rows).
    """
    alphas = _check_block_weights(alphas)
    d = 2 * len(alphas)
    if d < 2:
        raise SpecViolation("need at least one block weight")
    return state.validate_density(_imag_blocks(alphas, d))


def odd_block_zero(alphas):
    """Odd-dimension block state with a trailing zero diagonal entry;
    saturates the quadratic bound, with s_r >= 1/sqrt(d-1) automatic."""
    alphas = _check_block_weights(alphas)
    d = 2 * len(alphas) + 1
    if d < 3:
        raise SpecViolation("need at least one block weight")
    return state.validate_density(_imag_blocks(alphas, d))


def odd_linear(d, alpha):
    """Uniform-block family for odd d: (d-1)/2 blocks of weight alpha plus a
    trailing diagonal entry 1 - (d-1)*alpha; saturates the linear bound for
    1/d <= alpha <= 1/(d-1)."""
    if d < 3 or d % 2 == 0:
        raise SpecViolation(f"dimension must be odd and >= 3, got {d}")
    alpha = float(alpha)
    lo, hi = 1.0 / d, 1.0 / (d - 1)
    if not (lo - TRACE_TOL <= alpha <= hi + TRACE_TOL):
        raise SpecViolation(
            f"alpha={alpha!r} outside [1/d={lo!r}, 1/(d-1)={hi!r}]"
        )
    m = _imag_blocks([alpha] * ((d - 1) // 2), d)
    m[d - 1, d - 1] = 1.0 - (d - 1) * alpha
    return state.validate_density(m)


def embedded_imag_pure(d, beta):
    """Projector onto beta|0> + i sqrt(1-beta^2)|1> embedded in dimension d;
    saturates the purity bound with s_i^2 = 2 d beta^2 (1 - beta^2)."""
    if d < 2:
        raise SpecViolation(f"dimension must be >= 2, got {d}")
    beta = float(beta)
    if not (0.0 <= beta <= 1.0):
        raise SpecViolation(f"beta={beta!r} outside [0, 1]")
    psi = np.zeros(d, dtype=complex)
    psi[0] = beta
    psi[1] = 1j * np.sqrt(1.0 - beta**2)
    return state.validate_density(np.outer(psi, psi.conj()))


def build_state(spec):
    """Construct the state selected by an ExtremalSpec."""
    if spec.family == EVEN_BLOCK:
        if spec.alphas is None:
            raise SpecViolation("EVEN_BLOCK requires alphas")
        rho = even_block(spec.alphas)
    elif spec.family == ODD_BLOCK_ZERO:
        if spec.alphas is None:
            raise SpecViolation("ODD_BLOCK_ZERO requires alphas")
        rho = odd_block_zero(spec.alphas)
    elif spec.family == ODD_LINEAR:
        if spec.alpha is None:
            raise SpecViolation("ODD_LINEAR requires alpha")
        rho = odd_linear(spec.dim, spec.alpha)
    elif spec.family == EMBEDDED_IMAG_PURE:
        if spec.beta is None:
            raise SpecViolation("EMBEDDED_IMAG_PURE requires beta")
        rho = embedded_imag_pure(spec.dim, spec.beta)
    else:
        raise SpecViolation(f"unknown family {spec.family!r}")
    if rho.dim != spec.dim:
        raise SpecViolation(
            f"spec dim {spec.dim} inconsistent with constructed dim {rho.dim}"
        )
    return rho


def saturation_report(rho):
    """Bound margins plus Euclidean (s_r, s_i) distances to each landmark."""
    coords = state.state_coordinates(rho)
    verdict = bounds.evaluate_bounds(coords)
    point = np.array([coords.s_r, coords.s_i])
    distances = {
        name: float(np.hypot(*(point - np.array(p))))
        for name, p in bounds.landmark_points(rho.dim).items()
    }
    return SaturationReport(
        verdict=verdict, coords=coords, landmark_distances=distances
    )
