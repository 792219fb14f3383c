"""Matplotlib rendering of boundary curves and coordinate clouds.

Figures are written to files next to the delimited output; no interactive
backend is required.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import bounds

REGION_COLORS = {
    bounds.LINEAR: "tab:green",
    bounds.QUADRATIC: "tab:blue",
    bounds.PURITY: "tab:orange",
}


def plot_boundary(curve, path, landmarks=None, dpi=150):
    """Render the boundary curve, one colored segment per region, with
    landmark points marked."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    s_r = np.array([s.s_r for s in curve.samples])
    s_i = np.array([s.s_i_max for s in curve.samples])
    regions = [s.region for s in curve.samples]
    for region in bounds.REGIONS:
        mask = np.array([r == region for r in regions])
        if mask.any():
            ax.plot(s_r[mask], s_i[mask], color=REGION_COLORS[region],
                    lw=2, label=region.lower())
    if landmarks is not None:
        for name, point in bounds.landmark_points(curve.dim).items():
            ax.plot(*point, "k.", ms=8)
            ax.annotate(name, point, textcoords="offset points",
                        xytext=(4, 4), fontsize=7)
    ax.set_xlabel(r"$s_R$")
    ax.set_ylabel(r"$s_I^{\max}$")
    ax.set_title(f"state-space boundary, d={curve.dim}")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


def plot_cloud(records, dim, path, dpi=150, n_curve=400):
    """Scatter sampled (s_r, s_i) points under the analytic boundary."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    s_r = np.array([r.s_r for r in records])
    s_i = np.array([r.s_i for r in records])
    ax.scatter(s_r, s_i, s=2, alpha=0.3, color="0.4", rasterized=True)
    curve = bounds.boundary_samples(dim, n_curve)
    cr = np.array([s.s_r for s in curve.samples])
    ci = np.array([s.s_i_max for s in curve.samples])
    ax.plot(cr, ci, color="tab:red", lw=1.5, label="boundary")
    ax.set_xlabel(r"$s_R$")
    ax.set_ylabel(r"$s_I$")
    ax.set_title(f"coordinate cloud, d={dim}, n={len(records)}")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
