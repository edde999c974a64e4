from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from skimage import measure

from app import config
from app.cone.pair import cone_form, intersection_plane
from app.quadric.pencil import QUADRIC_INDEX, Quadric

logger = logging.getLogger(__name__)

Field = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class MeshObject:
    name: str
    vertices: np.ndarray
    faces: np.ndarray


def bounding_box(points: np.ndarray, pad: float = 0.25) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=float)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.maximum(hi - lo, 1.0)
    return lo - pad * span, hi + pad * span


def implicit_mesh(name: str, field: Field, lo: np.ndarray, hi: np.ndarray, resolution: int | None = None) -> MeshObject:
    """Triangle mesh of field = 0 by marching cubes over a regular grid."""
    n = resolution or config.MESH_RESOLUTION
    axes = [np.linspace(lo[i], hi[i], n) for i in range(3)]
    X, Y, Z = np.meshgrid(*axes, indexing="ij")
    F = field(X, Y, Z)
    if F.min() > 0 or F.max() < 0:
        logger.warning("surface %s does not cross the bounding box", name)
        return MeshObject(name, np.zeros((0, 3)), np.zeros((0, 3), dtype=int))
    spacing = tuple(float(v) for v in (np.asarray(hi) - np.asarray(lo)) / (n - 1))
    verts, faces, _normals, _values = measure.marching_cubes(F, level=0.0, spacing=spacing)
    return MeshObject(name, verts + np.asarray(lo), faces)


def quadric_field(quadric: Quadric) -> Field:
    m = np.array([float(c) for c in quadric.monomials()])
    m = m / np.max(np.abs(m))

    def field(X: np.ndarray, Y: np.ndarray, Z: np.ndarray) -> np.ndarray:
        x = (np.ones_like(X), X, Y, Z)
        return sum(c * x[i] * x[j] for (i, j), c in zip(QUADRIC_INDEX, m))

    return field


def write_obj(path: Path, objects: Sequence[MeshObject], markers: dict[str, np.ndarray] | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# indexed triangle mesh"]
    offset = 1
    for obj in objects:
        lines.append(f"o {obj.name}")
        lines.extend(f"v {x:.6f} {y:.6f} {z:.6f}" for x, y, z in obj.vertices)
        lines.extend(f"f {a + offset} {b + offset} {c + offset}" for a, b, c in obj.faces)
        offset += len(obj.vertices)
    if markers:
        lines.append("o markers")
        for label, (x, y, z) in markers.items():
            lines.append(f"# {label}")
            lines.append(f"v {x:.6f} {y:.6f} {z:.6f}")
        lines.append("p " + " ".join(str(offset + i) for i in range(len(markers))))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    logger.info("wrote %s (%d objects)", path, len(objects))
    return path


def write_quadric_mesh(
    path: Path,
    quadric: Quadric,
    points: np.ndarray,
    labels: Sequence[str],
    resolution: int | None = None,
) -> Path:
    lo, hi = bounding_box(points)
    mesh = implicit_mesh("quadric", quadric_field(quadric), lo, hi, resolution)
    return write_obj(path, [mesh], dict(zip(labels, np.asarray(points, dtype=float))))


def write_cone_scene(
    path: Path,
    t: Sequence[float],
    points: np.ndarray,
    labels: Sequence[str],
    resolution: int | None = None,
) -> Path:
    """Both cones, their intersection plane, and the points."""
    pts = np.asarray(points, dtype=float)
    t = np.asarray(t, dtype=float)
    lo, hi = bounding_box(np.vstack([pts, np.zeros(3), t]))
    objects = [
        implicit_mesh("origin_cone", lambda X, Y, Z: cone_form(np.stack([X, Y, Z], axis=-1)), lo, hi, resolution),
        implicit_mesh(
            "translated_cone",
            lambda X, Y, Z: cone_form(np.stack([X - t[0], Y - t[1], Z - t[2]], axis=-1)),
            lo,
            hi,
            resolution,
        ),
    ]
    if np.any(t):
        c = intersection_plane(t).coeffs
        objects.append(
            implicit_mesh("intersection_plane", lambda X, Y, Z: c[0] + c[1] * X + c[2] * Y + c[3] * Z, lo, hi, resolution)
        )
    return write_obj(path, objects, dict(zip(labels, pts)))
