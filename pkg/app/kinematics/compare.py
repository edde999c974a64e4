from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import orthogonal_procrustes

from app import config
from app.errors import BadPentagon, DegenerateSource
from app.kinematics.dual_quaternion import DualQuaternion, dq_act_many

_AXIS = np.array([0.0, 0.0, 1.0])
_FALLBACK_AXIS = np.array([1.0, 0.0, 0.0])


class Relation(str, Enum):
    DIRECT_PAIR = "DirectPair"
    MIRRORED_PAIR = "MirroredPair"
    UNRELATED = "Unrelated"


@dataclass(frozen=True)
class Comparison:
    relation: Relation
    residual: float
    determinant: int
    anchor_distance: float

    def as_dict(self) -> dict:
        return {
            "relation": self.relation.value,
            "residual": self.residual,
            "determinant": self.determinant,
            "anchor_distance": self.anchor_distance,
        }


def check_source(source: np.ndarray) -> np.ndarray:
    src = np.asarray(source, dtype=float)
    if src.ndim != 2 or src.shape[1] != 3:
        raise ValueError(f"source points must be (n, 3), got {src.shape}")
    if np.max(np.abs(src[:, 2])) > config.TOL_SELF:
        raise BadPentagon("source points must lie on z = 0")
    if np.linalg.matrix_rank(src[1:, :2] - src[0, :2], tol=config.TOL_SELF) < 2:
        raise DegenerateSource("source points are collinear")
    return src


def _orient(n: np.ndarray, anchor: np.ndarray) -> np.ndarray:
    # planes through the apex fall back to fixed reference directions
    for ref in (-anchor, _AXIS, _FALLBACK_AXIS, np.array([0.0, 1.0, 0.0])):
        side = float(n @ ref)
        if abs(side) > 1e-9:
            return n if side > 0 else -n
    return n


def in_plane_coordinates(images: np.ndarray, normal: np.ndarray) -> np.ndarray:
    """2D coordinates of coplanar images, anchored at the first image.

    The frame is e1 = cone axis projected into the plane, n = unit normal toward
    the apex, e2 = n x e1; so it depends on the image plane only.
    """
    anchor = images[0]
    n = _orient(normal / np.linalg.norm(normal), anchor)
    e1 = _AXIS - (_AXIS @ n) * n
    if np.linalg.norm(e1) < 1e-9:
        e1 = _FALLBACK_AXIS - (_FALLBACK_AXIS @ n) * n
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(n, e1)
    rel = images - anchor
    return np.stack([rel @ e1, rel @ e2], axis=1)


def image_plane_normal(q: DualQuaternion) -> np.ndarray:
    return q.rotation_matrix() @ _AXIS


def compare_solutions(
    q1: DualQuaternion,
    q2: DualQuaternion,
    source: np.ndarray,
    tol: float | None = None,
    displacement_tol: float | None = None,
) -> Comparison:
    tol = config.TOL_COMPARE if tol is None else tol
    src = check_source(source)
    img1 = dq_act_many(q1, src, displacement_tol)
    img2 = dq_act_many(q2, src, displacement_tol)
    p1 = in_plane_coordinates(img1, image_plane_normal(q1))
    p2 = in_plane_coordinates(img2, image_plane_normal(q2))
    rot, _ = orthogonal_procrustes(p1, p2)
    align = float(np.max(np.linalg.norm(p1 @ rot - p2, axis=1)))
    anchor = float(np.linalg.norm(img1[0] - img2[0]))
    det = 1 if np.linalg.det(rot) > 0 else -1
    if align < tol and anchor < tol:
        relation = Relation.DIRECT_PAIR if det > 0 else Relation.MIRRORED_PAIR
        return Comparison(relation=relation, residual=align, determinant=det, anchor_distance=anchor)
    return Comparison(relation=Relation.UNRELATED, residual=align + anchor, determinant=det, anchor_distance=anchor)
