from .conic import conic_through_5
from .errors import DocumentError, GeometryError
from .kinematics import DualQuaternion, compare_solutions, dq_act
from .quadric import quadric_through_9

__all__ = [
    "DocumentError",
    "DualQuaternion",
    "GeometryError",
    "compare_solutions",
    "conic_through_5",
    "dq_act",
    "quadric_through_9",
]
