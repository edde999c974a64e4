from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from app import config
from app.errors import DegenerateTriple, PointsOffCone, ZeroTranslation

# (x, y, z) weights of the quadratic part x² + y² - z²
_SIGNATURE = np.array([1.0, 1.0, -1.0])


def cone_form(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    return np.sum(_SIGNATURE * p * p, axis=-1)


@dataclass(frozen=True)
class Plane3f:
    """c0 + c1 x + c2 y + c3 z = 0."""

    coeffs: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        c = tuple(float(v) for v in self.coeffs)
        if len(c) != 4 or not any(c):
            raise ValueError(f"invalid plane coefficients {c}")
        object.__setattr__(self, "coeffs", c)

    def canonical(self) -> "Plane3f":
        c = np.array(self.coeffs)
        return Plane3f(tuple(c / c[np.argmax(np.abs(c))]))

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        c = np.array(self.coeffs)
        return c[0] + p @ c[1:]

    def normal(self) -> np.ndarray:
        return np.array(self.coeffs[1:])


@dataclass(frozen=True)
class ConeModel:
    """(x - t1)² + (y - t2)² - (z - t3)² = 0: the right cone with apex moved to t."""

    t: tuple[float, float, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", tuple(float(v) for v in self.t))

    def coefficients(self) -> dict[str, float]:
        t1, t2, t3 = self.t
        return {
            "1": t1 * t1 + t2 * t2 - t3 * t3,
            "x": -2.0 * t1,
            "y": -2.0 * t2,
            "z": 2.0 * t3,
            "x^2": 1.0,
            "y^2": 1.0,
            "z^2": -1.0,
        }

    def linear_part(self) -> np.ndarray:
        c = self.coefficients()
        return np.array([c["1"], c["x"], c["y"], c["z"]])

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        return cone_form(np.asarray(p, dtype=float) - np.array(self.t))


def translated_cone(t: Sequence[float]) -> ConeModel:
    return ConeModel(tuple(t))


def intersection_plane(t: Sequence[float]) -> Plane3f:
    """Origin cone minus translated cone: t1²+t2²-t3² - 2t1x - 2t2y + 2t3z = 0."""
    if not np.any(np.asarray(t, dtype=float)):
        raise ZeroTranslation("translation is zero: the cones coincide")
    return Plane3f(tuple(translated_cone(t).linear_part()))


def recover_translation(
    p1: Sequence[float],
    p2: Sequence[float],
    p3: Sequence[float],
    tol: float | None = None,
) -> list[np.ndarray]:
    """All real apex translations whose cone meets the origin cone in the plane of the points.

    The trivial solution t = 0 is always first.
    """
    tol = config.TOL_CONE_POINT if tol is None else tol
    pts = np.array([p1, p2, p3], dtype=float)
    off = np.abs(cone_form(pts))
    if np.any(off > tol):
        raise PointsOffCone(f"cone residuals {off.round(6).tolist()} exceed {tol:g}")
    diff = pts[1:] - pts[0]
    rows = np.stack([-2.0 * diff[:, 0], -2.0 * diff[:, 1], 2.0 * diff[:, 2]], axis=1)
    scale = max(1.0, float(np.max(np.abs(pts))))
    if np.linalg.norm(np.cross(diff[0], diff[1])) < 1e-12 * scale * scale:
        # rows = diff @ diag(-2, -2, 2), so collinear points leave at most one condition on t
        norms = np.linalg.norm(rows, axis=1)
        curve = tuple(float(v) for v in rows[np.argmax(norms)]) if np.max(norms) > 1e-12 * scale else None
        raise DegenerateTriple("the three points are collinear", curve=curve)
    d = np.cross(rows[0], rows[1])
    x1, y1, z1 = pts[0]
    quad = float(cone_form(d))
    lin = -2.0 * d[0] * x1 - 2.0 * d[1] * y1 + 2.0 * d[2] * z1
    out = [np.zeros(3)]
    if abs(quad) > 1e-12 * float(d @ d):
        out.append((-lin / quad) * d)
    return out


@dataclass(frozen=True)
class SharedConicReport:
    origin_residuals: list[float]
    translated_residuals: list[float]
    plane_residuals: list[float]
    fit_plane: Plane3f
    plane_factor: float | None
    tolerance: float

    @property
    def max_residual(self) -> float:
        return float(max(map(abs, self.origin_residuals + self.translated_residuals + self.plane_residuals)))

    @property
    def flagged(self) -> bool:
        return self.max_residual > self.tolerance

    def as_dict(self) -> dict:
        return {
            "origin_residuals": self.origin_residuals,
            "translated_residuals": self.translated_residuals,
            "plane_residuals": self.plane_residuals,
            "fit_plane": list(self.fit_plane.coeffs),
            "plane_factor": self.plane_factor,
            "max_residual": self.max_residual,
            "flagged": self.flagged,
        }


def plane_through(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> Plane3f:
    n = np.cross(b - a, c - a)
    return Plane3f((-float(n @ a), *n))


def shared_conic_check(points: np.ndarray, t: Sequence[float], tol: float | None = None) -> SharedConicReport:
    tol = config.TOL_SHARED_CONIC if tol is None else tol
    pts = np.asarray(points, dtype=float)
    cone = translated_cone(t)
    # t = 0 has no intersection plane; the translated form then equals the origin form
    plane = None if not np.any(np.asarray(t, dtype=float)) else intersection_plane(t)
    fit = plane_through(pts[0], pts[1], pts[2])
    if plane is not None:
        kx = np.array(plane.coeffs)
        f = np.array(fit.coeffs)
        if f @ kx < 0:
            fit = Plane3f(tuple(-f))
            f = -f
        factor = float(f @ kx / (kx @ kx))
        plane_res = plane.evaluate(pts).tolist()
    else:
        factor = None
        plane_res = [0.0] * len(pts)
    return SharedConicReport(
        origin_residuals=cone_form(pts).tolist(),
        translated_residuals=cone.evaluate(pts).tolist(),
        plane_residuals=plane_res,
        fit_plane=fit,
        plane_factor=factor,
        tolerance=tol,
    )
