# Placing five coplanar points on a right cone.
from .constraints import ConstraintSystem, build_constraints
from .pair import (
    ConeModel,
    Plane3f,
    SharedConicReport,
    cone_form,
    intersection_plane,
    plane_through,
    recover_translation,
    shared_conic_check,
    translated_cone,
)
from .solver import Solution, SolutionSet, SolverConfig, canonical_sign, mirror_pairs, solve
from .uvp import (
    RootCheck,
    UvpFactor,
    classify_root,
    f16_no_real_roots_check,
    factor_from_roots,
    nearest_real_root,
    real_roots,
    scaled_residual,
    uvp_residual,
)

__all__ = [
    "ConeModel",
    "ConstraintSystem",
    "Plane3f",
    "RootCheck",
    "SharedConicReport",
    "Solution",
    "SolutionSet",
    "SolverConfig",
    "UvpFactor",
    "build_constraints",
    "canonical_sign",
    "classify_root",
    "cone_form",
    "f16_no_real_roots_check",
    "factor_from_roots",
    "intersection_plane",
    "mirror_pairs",
    "nearest_real_root",
    "plane_through",
    "real_roots",
    "recover_translation",
    "scaled_residual",
    "shared_conic_check",
    "solve",
    "translated_cone",
    "uvp_residual",
]
