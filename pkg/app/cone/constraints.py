from __future__ import annotations

import math

import numpy as np

from app import config
from app.errors import BadPentagon
from app.kinematics.dual_quaternion import quat_conj, quat_mul

_BASIS = np.eye(4)


def _vec(q: np.ndarray) -> np.ndarray:
    return q[..., 1:]


class ConstraintSystem:
    """Eight polynomial conditions on the Study parameters s = (x0..x3, y0..y3).

    r1, r2   first point on the generator y = 0, x = sqrt(k) z
    r3..r6   remaining points on the cone x² + y² - k z² = 0
    r7       x·x - 1
    r8       x·y

    Images are the unnormalized sandwich vec(x p x̄ + y x̄ - x ȳ), so every
    residual is a polynomial of degree at most 4. Methods accept a single
    8-vector or a batch of shape (n, 8).
    """

    def __init__(self, pentagon: np.ndarray, half_angle_tan2: float = 1.0) -> None:
        self.pentagon = np.asarray(pentagon, dtype=float)
        self.k = float(half_angle_tan2)
        self._generator = math.sqrt(self.k)
        self._points = np.concatenate([np.zeros((5, 1)), self.pentagon], axis=1)

    def images(self, s: np.ndarray) -> np.ndarray:
        """(n, 5, 3) unnormalized images of the five points."""
        s = np.atleast_2d(s)
        x = s[:, None, :4]
        y = s[:, None, 4:]
        xc = quat_conj(x)
        p = self._points[None, :, :]
        return _vec(quat_mul(quat_mul(x, p), xc) + quat_mul(y, xc) - quat_mul(x, quat_conj(y)))

    def residuals(self, s: np.ndarray) -> np.ndarray:
        single = np.ndim(s) == 1
        s = np.atleast_2d(np.asarray(s, dtype=float))
        img = self.images(s)
        a = img[:, 0]
        rest = img[:, 1:]
        out = np.empty((len(s), 8))
        out[:, 0] = a[:, 1]
        out[:, 1] = a[:, 0] - self._generator * a[:, 2]
        out[:, 2:6] = rest[..., 0] ** 2 + rest[..., 1] ** 2 - self.k * rest[..., 2] ** 2
        out[:, 6] = np.sum(s[:, :4] ** 2, axis=1) - 1.0
        out[:, 7] = np.sum(s[:, :4] * s[:, 4:], axis=1)
        return out[0] if single else out

    def _image_jacobian(self, s: np.ndarray) -> np.ndarray:
        """(n, 5, 3, 8) partials of each image with respect to s."""
        x = s[:, None, None, :4]
        y = s[:, None, None, 4:]
        e = _BASIS[None, None, :, :]
        ec = quat_conj(e)
        p = self._points[None, :, None, :]
        xc = quat_conj(x)
        yc = quat_conj(y)
        dx = quat_mul(quat_mul(e, p), xc) + quat_mul(quat_mul(x, p), ec) + quat_mul(y, ec) - quat_mul(e, yc)
        dy = quat_mul(e, xc) - quat_mul(x, ec)
        # (n, 5, 4, 4) -> (n, 5, 3, 4) per block
        dx = np.swapaxes(_vec(dx), -1, -2)
        dy = np.broadcast_to(np.swapaxes(_vec(dy), -1, -2), dx.shape)
        return np.concatenate([dx, dy], axis=-1)

    def jacobian(self, s: np.ndarray) -> np.ndarray:
        single = np.ndim(s) == 1
        s = np.atleast_2d(np.asarray(s, dtype=float))
        img = self.images(s)
        dimg = self._image_jacobian(s)
        jac = np.zeros((len(s), 8, 8))
        jac[:, 0] = dimg[:, 0, 1]
        jac[:, 1] = dimg[:, 0, 0] - self._generator * dimg[:, 0, 2]
        grad = 2.0 * img[:, 1:] * np.array([1.0, 1.0, -self.k])
        jac[:, 2:6] = np.einsum("nmc,nmcj->nmj", grad, dimg[:, 1:])
        jac[:, 6, :4] = 2.0 * s[:, :4]
        jac[:, 7, :4] = s[:, 4:]
        jac[:, 7, 4:] = s[:, :4]
        return jac[0] if single else jac


def build_constraints(pentagon, half_angle_tan2: float = 1.0) -> ConstraintSystem:
    pts = np.asarray(pentagon, dtype=float)
    if pts.shape != (5, 3):
        if pts.shape == (5, 2):
            pts = np.concatenate([pts, np.zeros((5, 1))], axis=1)
        else:
            raise BadPentagon(f"expected 5 points, got array of shape {pts.shape}")
    if np.max(np.abs(pts[:, 2])) > config.TOL_SELF:
        raise BadPentagon("pentagon must lie on the plane z = 0")
    if np.max(np.abs(pts[0])) > config.TOL_SELF:
        raise BadPentagon(f"first point must be the origin, got {tuple(pts[0])}")
    if half_angle_tan2 <= 0:
        raise ValueError("half_angle_tan2 must be positive")
    return ConstraintSystem(pts, half_angle_tan2)
