# Exact homogeneous-coordinate primitives.
from .core import (
    HLine2,
    HPlane3,
    HPoint2,
    HPoint3,
    Rational,
    canonical,
    cross3,
    incidence,
    join_points2,
    meet_lines2,
    plane_coordinates,
    plane_through_points3,
    to_rational,
)
from .exact import det3, det_bareiss, exact_rank, signed_minors

__all__ = [
    "HLine2",
    "HPlane3",
    "HPoint2",
    "HPoint3",
    "Rational",
    "canonical",
    "cross3",
    "det3",
    "det_bareiss",
    "exact_rank",
    "incidence",
    "join_points2",
    "meet_lines2",
    "plane_coordinates",
    "plane_through_points3",
    "signed_minors",
    "to_rational",
]
