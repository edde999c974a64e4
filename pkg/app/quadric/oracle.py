from __future__ import annotations

from typing import Sequence

from app.errors import DegenerateConfiguration
from app.projective.core import HPoint3, canonical
from app.projective.exact import det_bareiss
from app.quadric.pencil import QUADRIC_INDEX, Quadric


def quadric_oracle_det(pts: Sequence[HPoint3]) -> Quadric:
    """Quadric through nine points from the ten 9x9 minors of the monomial matrix."""
    if len(pts) != 9:
        raise ValueError(f"need 9 points, got {len(pts)}")
    rows = []
    for p in pts:
        x = canonical(p)
        rows.append([x[i] * x[j] for i, j in QUADRIC_INDEX])
    cofactors = []
    for k in range(10):
        minor = [[v for j, v in enumerate(row) if j != k] for row in rows]
        d = det_bareiss(minor)
        cofactors.append(d if k % 2 == 0 else -d)
    if not any(cofactors):
        raise DegenerateConfiguration("all ten 9x9 sub-determinants vanish")
    return Quadric.from_monomials(cofactors).canonical()
