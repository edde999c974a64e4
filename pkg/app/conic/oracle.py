from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from app.conic.flops import FlopCounter
from app.conic.pencil import Conic
from app.errors import DegenerateConfiguration
from app.projective.core import HPoint2, canonical


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


_PERMS_5 = [(perm, _permutation_sign(perm)) for perm in permutations(range(5))]


def leibniz_det(m: Sequence[Sequence], fc: FlopCounter):
    """Permutation expansion; the work is fixed by the size, not the entries."""
    n = len(m)
    perms = _PERMS_5 if n == 5 else [(p, _permutation_sign(p)) for p in permutations(range(n))]
    total = 0
    for perm, sign in perms:
        term = m[0][perm[0]]
        for row in range(1, n):
            term = fc.mul(term, m[row][perm[row]])
        total = fc.add(total, term) if sign > 0 else fc.sub(total, term)
    return total


def monomial_row(p: Sequence, fc: FlopCounter) -> list:
    x0, x1, x2 = p
    return [fc.mul(x0, x0), fc.mul(x0, x1), fc.mul(x0, x2), fc.mul(x1, x1), fc.mul(x1, x2), fc.mul(x2, x2)]


def conic_oracle_det(pts: Sequence[HPoint2], counter: FlopCounter | None = None) -> Conic:
    """Conic through five points from the six 5x5 minors of the monomial matrix.

    Expanding the 6x6 determinant with a symbolic first row along that row gives
    c_k = (-1)^k M_k as monomial coefficients.
    """
    if len(pts) != 5:
        raise ValueError(f"need 5 points, got {len(pts)}")
    fc = counter or FlopCounter()
    # integer entries keep the permutation expansion in machine-friendly ints
    coords = [tuple(int(v) for v in canonical(p)) for p in pts]
    rows = [monomial_row(c, fc) for c in coords]
    cofactors = []
    for k in range(6):
        minor = [[v for j, v in enumerate(row) if j != k] for row in rows]
        d = leibniz_det(minor, fc)
        cofactors.append(d if k % 2 == 0 else -d)
    if not any(cofactors):
        raise DegenerateConfiguration("all six 5x5 sub-determinants vanish")
    stored = (
        Fraction(cofactors[0]),
        fc.div(Fraction(cofactors[1]), 2),
        fc.div(Fraction(cofactors[2]), 2),
        Fraction(cofactors[3]),
        fc.div(Fraction(cofactors[4]), 2),
        Fraction(cofactors[5]),
    )
    return Conic(stored).canonical()
