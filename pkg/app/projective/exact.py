from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy

Matrix = Sequence[Sequence[Fraction]]


def det3(m: Matrix) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def det_bareiss(m: Matrix) -> Fraction:
    """Exact determinant by fraction-free elimination (works on Fraction entries too)."""
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def delete_column(m: Matrix, col: int) -> list[list[Fraction]]:
    return [[v for j, v in enumerate(row) if j != col] for row in m]


def signed_minors(m: Matrix) -> tuple[Fraction, ...]:
    """Null vector of an n x (n+1) matrix as its alternating column-deleted minors.

    Component k is (-1)^k times the minor with column k removed, so that the
    vector satisfies every row and coincides with the Grassmann expansion of
    the (n+1) x (n+1) determinant along a symbolic first row.
    """
    cols = len(m[0])
    out = []
    for k in range(cols):
        minor = delete_column(m, k)
        d = det3(minor) if len(minor) == 3 else det_bareiss(minor)
        out.append(d if k % 2 == 0 else -d)
    return tuple(out)


def exact_rank(m: Matrix) -> int:
    if not m:
        return 0
    return int(sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in map(Fraction, row)] for row in m]).rank())
