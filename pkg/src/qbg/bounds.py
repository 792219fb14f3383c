"""The three state-space inequalities on (s_r, s_i) and the boundary curve.

For every state: s_d^2 + s_x^2 + s_i^2 <= d - 1 (purity bound) and
s_i^2 <= 1 + s_r^2 (quadratic bound). In odd dimension, additionally
sqrt(d) s_i <= sqrt(d-1) + s_r whenever s_r <= 1/sqrt(d-1) (linear bound).
The boundary in the (s_r, s_i) plane is the pointwise minimum of the
applicable branches; its joints are closed-form landmarks.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, OutOfRange

BOUND_TOL = 1e-9

LINEAR = "LINEAR"
QUADRATIC = "QUADRATIC"
PURITY = "PURITY"
REGIONS = (LINEAR, QUADRATIC, PURITY)


@dataclass(frozen=True)
class BoundVerdict:
    """Signed margins (positive = satisfied with slack) plus applicability."""

    dim: int
    purity_margin: float
    quadratic_margin: float
    linear_applicable: bool
    linear_margin: Optional[float]
    all_satisfied: bool


@dataclass(frozen=True)
class Landmarks:
    """Closed-form joints of the boundary curve."""

    dim: int
    pure_floor: float                 # sqrt((d-2)/2), minimum s_r of pure states
    even_intersection: Optional[tuple]  # (sqrt((d-2)/2), sqrt(d/2)) for even d
    odd_tangent: Optional[tuple]        # (1/sqrt(d-1), sqrt(d/(d-1))) for odd d
    si_cap_at_zero: float             # max s_i at s_r = 0


@dataclass(frozen=True)
class BoundarySample:
    s_r: float
    s_i_max: float
    region: str


@dataclass(frozen=True)
class BoundaryCurve:
    dim: int
    samples: tuple  # of BoundarySample, s_r increasing


def _check_dim(d):
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise DimensionMismatch(f"dimension must be an integer >= 2, got {d!r}")
    return int(d)


def evaluate_bounds(c, tol=BOUND_TOL):
    """Margins of the three inequalities for a coordinate triple.

    The linear bound applies only in odd dimension and only for
    s_r <= 1/sqrt(d-1).
    """
    d = c.dim
    purity_margin = float((d - 1) - (c.s_d**2 + c.s_x**2 + c.s_i**2))
    quadratic_margin = float(1.0 + c.s_r**2 - c.s_i**2)
    # ulp headroom so states sitting exactly on the tangency stay covered;
    # at that point the linear and quadratic branches coincide anyway
    linear_applicable = bool(
        d % 2 == 1 and c.s_r <= 1.0 / math.sqrt(d - 1) + 1e-12
    )
    linear_margin = None
    margins = [purity_margin, quadratic_margin]
    if linear_applicable:
        linear_margin = float(math.sqrt(d - 1) + c.s_r - math.sqrt(d) * c.s_i)
        margins.append(linear_margin)
    return BoundVerdict(
        dim=d,
        purity_margin=purity_margin,
        quadratic_margin=quadratic_margin,
        linear_applicable=linear_applicable,
        linear_margin=linear_margin,
        all_satisfied=bool(min(margins) >= -tol),
    )


def max_imaginary(s_r, d):
    """Largest s_i compatible with a state at the given s_r.

    Even d: min of the quadratic and purity branches. Odd d: the linear
    branch up to its tangency with the quadratic branch at
    s_r = 1/sqrt(d-1), then quadratic, then purity.
    """
    d = _check_dim(d)
    r_max = math.sqrt(d - 1.0)
    if s_r < 0 or s_r > r_max + 1e-12:
        raise OutOfRange(f"s_r={s_r!r} outside [0, sqrt(d-1)={r_max!r}]")
    s_r = min(float(s_r), r_max)
    if d % 2 == 1 and s_r <= 1.0 / math.sqrt(d - 1.0):
        return (math.sqrt(d - 1.0) + s_r) / math.sqrt(d)
    quad = math.sqrt(1.0 + s_r * s_r)
    pur = math.sqrt(max(d - 1.0 - s_r * s_r, 0.0))
    return min(quad, pur)


def landmarks(d):
    """Closed-form landmark points of the boundary for dimension d."""
    d = _check_dim(d)
    pure_floor = np.sqrt((d - 2) / 2.0)
    even_intersection = None
    odd_tangent = None
    if d % 2 == 0:
        even_intersection = (float(pure_floor), float(np.sqrt(d / 2.0)))
        si_cap = 1.0
    else:
        odd_tangent = (float(1.0 / np.sqrt(d - 1.0)), float(np.sqrt(d / (d - 1.0))))
        si_cap = np.sqrt((d - 1.0) / d)
    return Landmarks(
        dim=d,
        pure_floor=float(pure_floor),
        even_intersection=even_intersection,
        odd_tangent=odd_tangent,
        si_cap_at_zero=float(si_cap),
    )


def landmark_points(d):
    """The 2-D landmark points as a name -> (s_r, s_i) mapping."""
    lm = landmarks(d)
    points = {
        "pure_floor": (lm.pure_floor, float(np.sqrt(d / 2.0))),
        "si_cap_at_zero": (0.0, lm.si_cap_at_zero),
    }
    if lm.even_intersection is not None:
        points["even_intersection"] = lm.even_intersection
    if lm.odd_tangent is not None:
        points["odd_tangent"] = lm.odd_tangent
    return points


def region_of(s_r, d):
    """Active-branch tag at s_r; the lower-s_r region wins at joint points.

    A region with an empty interior is skipped: the quadratic branch never
    binds strictly for d=2 (its window [0, 0] is a single point) nor for
    d=3 (tangency and pure floor coincide).
    """
    d = _check_dim(d)
    r_cross = np.sqrt((d - 2) / 2.0)
    if d % 2 == 1:
        r_tangent = 1.0 / np.sqrt(d - 1.0)
        if s_r <= r_tangent:
            return LINEAR
        if s_r <= r_cross:
            return QUADRATIC
        return PURITY
    if d > 2 and s_r <= r_cross:
        return QUADRATIC
    return PURITY


def boundary_samples(d, n):
    """Sample the boundary at n points, s_r uniform on [0, sqrt(d-1)]."""
    d = _check_dim(d)
    if n < 2:
        raise OutOfRange(f"need at least 2 samples, got {n}")
    grid = np.linspace(0.0, np.sqrt(d - 1.0), n)
    samples = tuple(
        BoundarySample(float(r), max_imaginary(r, d), region_of(r, d))
        for r in grid
    )
    return BoundaryCurve(dim=d, samples=samples)
