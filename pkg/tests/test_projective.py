from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from app.errors import CoincidentLines, CoincidentPoints, CollinearPoints
from app.projective import (
    HLine2,
    HPoint2,
    HPoint3,
    canonical,
    det_bareiss,
    exact_rank,
    incidence,
    join_points2,
    meet_lines2,
    plane_coordinates,
    plane_through_points3,
    signed_minors,
    to_rational,
)


def test_canonical_clears_denominators_and_fixes_sign() -> None:
    assert canonical([Fraction(-1, 2), Fraction(1, 3), 0]) == (3, -2, 0)
    assert canonical([0, -4, 6]) == (0, 2, -3)


def test_canonical_rejects_zero_vector() -> None:
    with pytest.raises(ValueError):
        canonical([0, 0, 0])


def test_float_goes_through_its_printed_decimal() -> None:
    assert to_rational(0.1) == Fraction(1, 10)


def test_join_and_meet_are_dual() -> None:
    p, q = HPoint2.affine(2, 3), HPoint2.affine(3, 5)
    line = join_points2(p, q)
    assert line.coords == (1, -2, 1)
    assert incidence(p, line) == 0 and incidence(q, line) == 0
    other = join_points2(HPoint2.affine(7, 7), HPoint2.affine(13, 6))
    x = meet_lines2(line, other)
    assert incidence(x, line) == 0 and incidence(x, other) == 0


def test_meet_of_two_joins_is_the_shared_point() -> None:
    rng = random.Random(23)
    checked = 0
    while checked < 200:
        rows = [[rng.randint(-20, 20) for _ in range(3)] for _ in range(3)]
        if det_bareiss(rows) == 0:
            continue
        a, b, c = (HPoint2.of(*row) for row in rows)
        x = meet_lines2(join_points2(a, b), join_points2(a, c))
        assert x.same_as(a)
        checked += 1


def test_join_of_equal_points_raises() -> None:
    p = HPoint2.of(1, 2, 3)
    with pytest.raises(CoincidentPoints):
        join_points2(p, HPoint2.of(2, 4, 6))
    with pytest.raises(CoincidentLines):
        meet_lines2(HLine2.of(1, 1, 1), HLine2.of(-3, -3, -3))


def test_same_as_ignores_scale() -> None:
    assert HPoint2.of(1, 2, 3).same_as(HPoint2.of(-2, -4, -6))
    assert not HPoint2.of(1, 2, 3).same_as(HLine2.of(1, 2, 3))


def test_plane_coordinates_match_affine_cross_product() -> None:
    a, b, c = (4, 3, 0), (4, 10, 4), (-3, 9, 7)
    n = (sympy.Matrix(b) - sympy.Matrix(a)).cross(sympy.Matrix(c) - sympy.Matrix(a))
    expected = (-n.dot(sympy.Matrix(a)), *n)
    got = plane_coordinates((1, *a), (1, *b), (1, *c))
    assert got == tuple(Fraction(int(v)) for v in expected)
    assert got == (-16, 25, -28, 49)


def test_plane_through_collinear_points_raises() -> None:
    with pytest.raises(CollinearPoints):
        plane_through_points3(HPoint3.affine(0, 0, 0), HPoint3.affine(1, 1, 1), HPoint3.affine(2, 2, 2))


def test_signed_minors_is_a_null_vector() -> None:
    rng = random.Random(7)
    for _ in range(20):
        m = [[Fraction(rng.randint(-9, 9)) for _ in range(5)] for _ in range(4)]
        v = signed_minors(m)
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


def test_bareiss_agrees_with_sympy() -> None:
    rng = random.Random(11)
    for n in (1, 2, 5, 9):
        m = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(m) == Fraction(int(sympy.Matrix(m).det()))


def test_bareiss_handles_zero_pivots() -> None:
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 1], [0, 2]]) == 0


def test_exact_rank() -> None:
    assert exact_rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert exact_rank([[Fraction(1, 3), 1], [1, 3], [0, 1]]) == 2
