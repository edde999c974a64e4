from __future__ import annotations

import logging
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from skimage import measure  # noqa: E402

from app import config  # noqa: E402
from app.conic.pencil import Conic  # noqa: E402

logger = logging.getLogger(__name__)


def plot_bounds(points: np.ndarray, pad: float = 0.35) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=float)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.maximum(hi - lo, 1.0)
    return lo - pad * span, hi + pad * span


def conic_curves(conic: Conic, lo: np.ndarray, hi: np.ndarray, samples: int | None = None) -> list[np.ndarray]:
    """Zero level set of the affine form (x0 = 1) traced by marching squares."""
    samples = samples or config.PLOT_SAMPLES
    a = np.array([float(c) for c in conic.coeffs])
    a = a / np.max(np.abs(a))
    xs = np.linspace(lo[0], hi[0], samples)
    ys = np.linspace(lo[1], hi[1], samples)
    X, Y = np.meshgrid(xs, ys)
    F = a[0] + 2 * a[1] * X + 2 * a[2] * Y + a[3] * X * X + 2 * a[4] * X * Y + a[5] * Y * Y
    step = np.array([(hi[1] - lo[1]) / (samples - 1), (hi[0] - lo[0]) / (samples - 1)])
    out = []
    for c in measure.find_contours(F, 0.0):
        rc = c * step + np.array([lo[1], lo[0]])
        out.append(rc[:, ::-1])
    return out


def write_conic_svg(
    path: Path,
    conic: Conic,
    points: np.ndarray,
    labels: Sequence[str],
    title: str = "",
    samples: int | None = None,
) -> Path:
    pts = np.asarray(points, dtype=float)
    lo, hi = plot_bounds(pts)
    curves = conic_curves(conic, lo, hi, samples)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context({"svg.hashsalt": "conic5", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 6))
        for c in curves:
            ax.plot(c[:, 0], c[:, 1], color="tab:blue", linewidth=1.2)
        ax.scatter(pts[:, 0], pts[:, 1], color="tab:red", zorder=3)
        for (x, y), label in zip(pts, labels):
            ax.annotate(label, (x, y), textcoords="offset points", xytext=(5, 5))
        ax.set_xlim(lo[0], hi[0])
        ax.set_ylim(lo[1], hi[1])
        ax.set_aspect("equal")
        ax.grid(True, linewidth=0.3)
        if title:
            ax.set_title(title)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    logger.info("wrote %s (%d curve segments)", path, len(curves))
    return path
