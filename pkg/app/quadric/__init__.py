# Nine-point quadrics by pencils of plane pairs.
from .oracle import quadric_oracle_det
from .pencil import (
    DEFAULT_CHOICE,
    PairChoice,
    PlanePair,
    PlanePairQuadric,
    Quadric,
    QuadricConstruction,
    choice_invariance_check,
    double_cover_check,
    enumerate_choices,
    enumerate_pairs,
    make_choice,
    quadric_pencil_details,
    quadric_through_9,
    solve_multipliers4,
)

__all__ = [
    "DEFAULT_CHOICE",
    "PairChoice",
    "PlanePair",
    "PlanePairQuadric",
    "Quadric",
    "QuadricConstruction",
    "choice_invariance_check",
    "double_cover_check",
    "enumerate_choices",
    "enumerate_pairs",
    "make_choice",
    "quadric_oracle_det",
    "quadric_pencil_details",
    "quadric_through_9",
    "solve_multipliers4",
]
