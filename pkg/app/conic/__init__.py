# Five-point conics by pencils of line pairs.
from .flops import FlopCounter, FlopReport, flop_report
from .oracle import conic_oracle_det
from .pencil import (
    Conic,
    ConicClass,
    LinePairConic,
    PencilConstruction,
    classify_conic,
    conic_pencil_details,
    conic_through_5,
    line_pair,
    solve_multipliers,
    third_pair,
    three_pair_rank,
)

__all__ = [
    "Conic",
    "ConicClass",
    "FlopCounter",
    "FlopReport",
    "LinePairConic",
    "PencilConstruction",
    "classify_conic",
    "conic_oracle_det",
    "conic_pencil_details",
    "conic_through_5",
    "flop_report",
    "line_pair",
    "solve_multipliers",
    "third_pair",
    "three_pair_rank",
]
