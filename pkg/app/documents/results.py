from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from app.cone.constraints import build_constraints
from app.cone.pair import translated_cone
from app.conic.pencil import Conic
from app.kinematics.dual_quaternion import DualQuaternion
from app.quadric.pencil import Quadric

FLOAT_DIGITS = 10


def exact(v: Fraction | int) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def exact_list(values: Iterable[Fraction | int]) -> list[str]:
    return [exact(v) for v in values]


def decimal(v: float, digits: int = FLOAT_DIGITS) -> float:
    """Float rounded to a fixed number of significant digits (negative zero folded)."""
    out = float(f"{float(v):.{digits}g}")
    return 0.0 if out == 0 else out


def decimals(values: Iterable[float], digits: int = FLOAT_DIGITS) -> list[float]:
    return [decimal(v, digits) for v in values]


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def write_result(path: Path, doc: dict[str, Any]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(doc), encoding="utf-8")


def read_result(path: Path) -> dict[str, Any]:
    return json.loads(path.read_text(encoding="utf-8"))


def conic_residuals(coeffs: Sequence[str], points: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    conic = Conic(tuple(Fraction(c) for c in coeffs))
    return [conic.evaluate(p) for p in points]


def quadric_residuals(coeffs: Sequence[str], points: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    quadric = Quadric(tuple(Fraction(c) for c in coeffs))
    return [quadric.evaluate(p) for p in points]


def placement_residuals(vector: Sequence[float], pentagon: np.ndarray) -> list[float]:
    """All eight constraint residuals of one reported DQ."""
    system = build_constraints(pentagon)
    dq = DualQuaternion.from_vector(vector)
    return [float(r) for r in system.residuals(dq.vector())]


def translation_residuals(t: Sequence[float], points: np.ndarray) -> list[float]:
    return [float(v) for v in translated_cone(t).evaluate(np.asarray(points, dtype=float))]
