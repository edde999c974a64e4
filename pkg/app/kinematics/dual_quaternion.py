from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.spatial.transform import Rotation

from app import config
from app.errors import InvalidDisplacement

Point3 = np.ndarray


def quat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product, scalar first, broadcasting over leading axes."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def quat_conj(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return a * np.array([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class DualQuaternion:
    """x + εy with Study parameters x = (x0..x3), y = (y0..y3)."""

    x: tuple[float, float, float, float]
    y: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        x = tuple(float(v) for v in self.x)
        y = tuple(float(v) for v in self.y)
        if len(x) != 4 or len(y) != 4:
            raise ValueError("dual quaternion needs 4 + 4 components")
        if not all(np.isfinite(x + y)):
            raise ValueError("dual quaternion components must be finite")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "DualQuaternion":
        v = [float(c) for c in v]
        if len(v) != 8:
            raise ValueError(f"expected 8 Study parameters, got {len(v)}")
        return cls(tuple(v[:4]), tuple(v[4:]))

    @classmethod
    def identity(cls) -> "DualQuaternion":
        return cls((1.0, 0.0, 0.0, 0.0), (0.0, 0.0, 0.0, 0.0))

    @classmethod
    def from_rotation(cls, rotation: Rotation, translation: Sequence[float] = (0.0, 0.0, 0.0)) -> "DualQuaternion":
        """Rotate first, then translate."""
        qx, qy, qz, qw = rotation.as_quat()
        x = np.array([qw, qx, qy, qz])
        t = np.concatenate([[0.0], np.asarray(translation, dtype=float)])
        y = 0.5 * quat_mul(t, x)
        return cls(tuple(x), tuple(y))

    @classmethod
    def half_turn(cls, axis: Sequence[float]) -> "DualQuaternion":
        """Rotation by π about a line through the origin."""
        a = np.asarray(axis, dtype=float)
        a = a / np.linalg.norm(a)
        return cls((0.0, *a), (0.0, 0.0, 0.0, 0.0))

    def vector(self) -> np.ndarray:
        return np.array(self.x + self.y)

    def __neg__(self) -> "DualQuaternion":
        return DualQuaternion(tuple(-v for v in self.x), tuple(-v for v in self.y))

    def __mul__(self, other: "DualQuaternion") -> "DualQuaternion":
        """(x1 + εy1)(x2 + εy2): acting with the product acts with `other` first."""
        x1, y1 = np.array(self.x), np.array(self.y)
        x2, y2 = np.array(other.x), np.array(other.y)
        return DualQuaternion(tuple(quat_mul(x1, x2)), tuple(quat_mul(x1, y2) + quat_mul(y1, x2)))

    def rotation_matrix(self) -> np.ndarray:
        x = np.array(self.x)
        return Rotation.from_quat([x[1], x[2], x[3], x[0]]).as_matrix()

    def translation(self) -> np.ndarray:
        x = np.array(self.x)
        y = np.array(self.y)
        return 2.0 * quat_mul(y, quat_conj(x))[1:] / float(x @ x)


def norm_condition(q: DualQuaternion) -> float:
    return float(sum(v * v for v in q.x) - 1.0)


def study_condition(q: DualQuaternion) -> float:
    return float(sum(a * b for a, b in zip(q.x, q.y)))


def check_displacement(q: DualQuaternion, tol: float | None = None) -> None:
    tol = config.TOL_DISPLACEMENT if tol is None else tol
    n, s = norm_condition(q), study_condition(q)
    if abs(n) > tol or abs(s) > tol:
        raise InvalidDisplacement(f"norm residual {n:.3g}, Study residual {s:.3g} exceed {tol:g}")


def dq_act_many(q: DualQuaternion, pts: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Images of points (n, 3) under the sandwich (x + εy)(1 + εp)(x̄ - εȳ)."""
    check_displacement(q, tol)
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    x = np.array(q.x)
    y = np.array(q.y)
    xc = quat_conj(x)
    p = np.concatenate([np.zeros((len(pts), 1)), pts], axis=1)
    rotated = quat_mul(quat_mul(x, p), xc)
    shift = quat_mul(y, xc) - quat_mul(x, quat_conj(y))
    return (rotated + shift)[:, 1:] / float(x @ x)


def dq_act(q: DualQuaternion, p: Sequence[float], tol: float | None = None) -> Point3:
    return dq_act_many(q, np.asarray(p, dtype=float)[None, :], tol)[0]
