"""Robustness of imaginarity: the trace norm of the imaginary part over d.

This is a genuine imaginarity monotone, unlike the Hilbert-Schmidt weight
s_i (the trace norm is contractive under completely positive trace-
preserving maps; the Hilbert-Schmidt norm is not for d > 2).
"""

from dataclasses import dataclass

import numpy as np

from . import state
from .numerics import trace_norm

FULL_TOL = 1e-9


@dataclass(frozen=True)
class ImaginarityReport:
    robustness: float
    s_r: float
    full_imaginarity: bool


def robustness(rho):
    """Trace norm of the imaginary part over d; 0 for real states, 1 at
    full imaginarity."""
    d = rho.dim
    m = rho.entries
    i_over_d = 1j * np.imag(m)  # (rho - rho^T)/2
    value = trace_norm(i_over_d)
    coords = state.state_coordinates(rho)
    return ImaginarityReport(
        robustness=value,
        s_r=coords.s_r,
        full_imaginarity=bool(value >= 1.0 - FULL_TOL),
    )
