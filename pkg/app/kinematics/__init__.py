# Dual-quaternion displacements.
from .compare import Comparison, Relation, compare_solutions, in_plane_coordinates
from .dual_quaternion import (
    DualQuaternion,
    Point3,
    check_displacement,
    dq_act,
    dq_act_many,
    norm_condition,
    quat_conj,
    quat_mul,
    study_condition,
)

__all__ = [
    "Comparison",
    "DualQuaternion",
    "Point3",
    "Relation",
    "check_displacement",
    "compare_solutions",
    "dq_act",
    "dq_act_many",
    "in_plane_coordinates",
    "norm_condition",
    "quat_conj",
    "quat_mul",
    "study_condition",
]
