"""File formats: matrix and Bloch-vector JSON, delimited coordinate and
boundary output, extremal specs, and rotation-step logs.

CSV floats carry 12 significant digits.
"""

import json

import numpy as np

from . import bounds, extremal, state, transform
from .errors import DimensionMismatch


def fmt(x):
    """12-significant-digit float formatting for delimited output."""
    return f"{float(x):.12g}"


# -- matrix JSON: {"dim": d, "re": [[...]], "im": [[...]]} ------------------

def matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    return {
        "dim": int(m.shape[0]),
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }


def matrix_from_json(obj):
    d = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.shape != (d, d) or im.shape != (d, d):
        raise DimensionMismatch(
            f"matrix entries must be {d}x{d}, got {re.shape} and {im.shape}"
        )
    return re + 1j * im


def write_matrix(path, m):
    with open(path, "w") as fh:
        json.dump(matrix_to_json(m), fh)
        fh.write("\n")


def read_matrix(path):
    with open(path) as fh:
        return matrix_from_json(json.load(fh))


# -- Bloch vector JSON ------------------------------------------------------

def bloch_to_json(v):
    return {
        "dim": v.dim,
        "v_d": list(map(float, v.v_d)),
        "v_x": list(map(float, v.v_x)),
        "v_i": list(map(float, v.v_i)),
    }


def bloch_from_json(obj):
    d = int(obj["dim"])
    v_d = np.asarray(obj["v_d"], dtype=float)
    v_x = np.asarray(obj["v_x"], dtype=float)
    v_i = np.asarray(obj["v_i"], dtype=float)
    if len(v_d) != d - 1 or len(v_x) != d * (d - 1) // 2 or len(v_i) != d * (d - 1) // 2:
        raise DimensionMismatch("Bloch component lengths inconsistent with dim")
    return state.BlochVector(dim=d, v_d=v_d, v_x=v_x, v_i=v_i)


# -- decomposition report JSON ----------------------------------------------

def parts_to_json(parts):
    return {
        "dim": parts.dim,
        "diag": list(map(float, parts.diag)),
        "real_off": parts.real_off.real.tolist(),
        "imag_off": parts.imag_off.imag.tolist(),  # entries of I are i * these
    }


def coordinates_to_json(c):
    return {
        "dim": c.dim,
        "s_d": c.s_d,
        "s_x": c.s_x,
        "s_i": c.s_i,
        "s_r": c.s_r,
    }


def verdict_to_json(v):
    return {
        "dim": v.dim,
        "purity_margin": v.purity_margin,
        "quadratic_margin": v.quadratic_margin,
        "linear_applicable": v.linear_applicable,
        "linear_margin": v.linear_margin,
        "all_satisfied": v.all_satisfied,
    }


# -- boundary curve ----------------------------------------------------------

BOUNDARY_HEADER = "s_r,s_i_max,region"


def write_boundary_csv(path, curve):
    with open(path, "w") as fh:
        fh.write(BOUNDARY_HEADER + "\n")
        for s in curve.samples:
            fh.write(f"{fmt(s.s_r)},{fmt(s.s_i_max)},{s.region}\n")


def read_boundary_csv(path):
    samples = []
    with open(path) as fh:
        header = fh.readline().strip()
        if header != BOUNDARY_HEADER:
            raise ValueError(f"unexpected boundary header {header!r}")
        for line in fh:
            r, si, region = line.strip().split(",")
            samples.append(
                bounds.BoundarySample(
                    s_r=float(r), s_i_max=float(si), region=region
                )
            )
    return samples


def boundary_to_json(curve):
    return {
        "dim": curve.dim,
        "samples": [
            {"s_r": s.s_r, "s_i_max": s.s_i_max, "region": s.region}
            for s in curve.samples
        ],
    }


def landmarks_to_json(lm):
    return {
        "dim": lm.dim,
        "pure_floor": lm.pure_floor,
        "even_intersection": list(lm.even_intersection)
        if lm.even_intersection is not None
        else None,
        "odd_tangent": list(lm.odd_tangent) if lm.odd_tangent is not None else None,
        "si_cap_at_zero": lm.si_cap_at_zero,
    }


def boundary_to_svg(curve, width=640, height=480, margin=40):
    """Minimal static SVG polyline of the boundary, one path per region."""
    r_max = max(s.s_r for s in curve.samples) or 1.0
    i_max = max(s.s_i_max for s in curve.samples) or 1.0

    def xy(s):
        x = margin + s.s_r / r_max * (width - 2 * margin)
        y = height - margin - s.s_i_max / i_max * (height - 2 * margin)
        return f"{x:.2f},{y:.2f}"

    colors = {
        bounds.LINEAR: "#2ca02c",
        bounds.QUADRATIC: "#1f77b4",
        bounds.PURITY: "#ff7f0e",
    }
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for region in bounds.REGIONS:
        pts = [xy(s) for s in curve.samples if s.region == region]
        if pts:
            lines.append(
                f'<polyline fill="none" stroke="{colors[region]}" '
                f'stroke-width="2" points="{" ".join(pts)}"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# -- empirical boundary ------------------------------------------------------

EMPIRICAL_HEADER = "s_r_bin_center,s_i_max_empirical"


def write_empirical_csv(path, emp):
    with open(path, "w") as fh:
        fh.write(EMPIRICAL_HEADER + "\n")
        for c, v in zip(emp.bin_centers, emp.s_i_max):
            fh.write(f"{fmt(c)},{fmt(v)}\n")


# -- coordinate cloud --------------------------------------------------------

CLOUD_HEADER = "idx,s_d,s_x,s_i,s_r,purity"
CLOUD_HEADER_ROBUSTNESS = CLOUD_HEADER + ",robustness,full_imaginarity"


def cloud_row(rec, rob=None):
    base = (
        f"{rec.seed_index},{fmt(rec.s_d)},{fmt(rec.s_x)},"
        f"{fmt(rec.s_i)},{fmt(rec.s_r)},{fmt(rec.purity)}"
    )
    if rob is None:
        return base
    return f"{base},{fmt(rob.robustness)},{int(rob.full_imaginarity)}"


def read_cloud_csv(path):
    rows = []
    with open(path) as fh:
        header = fh.readline().strip()
        if header not in (CLOUD_HEADER, CLOUD_HEADER_ROBUSTNESS):
            raise ValueError(f"unexpected cloud header {header!r}")
        for line in fh:
            parts = line.strip().split(",")
            rows.append(
                {
                    "idx": int(parts[0]),
                    "s_d": float(parts[1]),
                    "s_x": float(parts[2]),
                    "s_i": float(parts[3]),
                    "s_r": float(parts[4]),
                    "purity": float(parts[5]),
                }
            )
    return rows


# -- extremal specs ----------------------------------------------------------

def extremal_spec_from_json(obj):
    family = obj["family"]
    if family not in extremal.FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return extremal.ExtremalSpec(
        family=family,
        dim=int(obj["dim"]),
        alphas=tuple(obj["alphas"]) if "alphas" in obj else None,
        alpha=float(obj["alpha"]) if "alpha" in obj else None,
        beta=float(obj["beta"]) if "beta" in obj else None,
    )


def read_extremal_spec(path):
    with open(path) as fh:
        return extremal_spec_from_json(json.load(fh))


def saturation_to_json(report):
    return {
        "coordinates": coordinates_to_json(report.coords),
        "verdict": verdict_to_json(report.verdict),
        "landmark_distances": {
            k: v for k, v in sorted(report.landmark_distances.items())
        },
    }


# -- rotation step logs (JSON lines) ----------------------------------------

def write_step_log(path, steps):
    with open(path, "w") as fh:
        for s in steps:
            fh.write(json.dumps({"k": s.k, "l": s.l, "theta": s.theta}) + "\n")


def read_step_log(path):
    steps = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            steps.append(
                transform.RotationStep(
                    k=int(obj["k"]), l=int(obj["l"]), theta=float(obj["theta"])
                )
            )
    return steps
