from __future__ import annotations

import random
from fractions import Fraction

import pytest

from app import fixtures
from app.conic import (
    Conic,
    ConicClass,
    FlopCounter,
    classify_conic,
    conic_oracle_det,
    conic_pencil_details,
    conic_through_5,
    flop_report,
    solve_multipliers,
    third_pair,
    three_pair_rank,
)
from app.errors import DegenerateConfiguration, DuplicatePoints
from app.projective import HPoint2


def _affine(*pts) -> list[HPoint2]:
    return [HPoint2.affine(*p) for p in pts]


def test_worked_example_lines_and_multipliers(conic_points) -> None:
    details = conic_pencil_details(conic_points)
    for name, coords in fixtures.CONIC_LINES.items():
        assert details.lines[name].coords == coords
    assert details.pr.monomials[0] == -378
    assert details.qs.monomials[0] == -49
    assert details.multipliers == fixtures.CONIC_MULTIPLIERS


def test_worked_example_conic(conic_points) -> None:
    conic = conic_through_5(conic_points)
    assert conic.coeffs == fixtures.CONIC_CANONICAL
    assert Conic.from_monomials(fixtures.CONIC_PRINTED_MONOMIALS).same_as(conic)
    assert all(conic.evaluate(p) == 0 for p in conic_points)
    assert classify_conic(conic) is ConicClass.ELLIPSE


def test_pentagon_conic_is_a_hyperbola() -> None:
    conic = conic_through_5(_affine(*fixtures.PENTAGON))
    assert conic.coeffs == (0, 5, 6, -2, 0, 4)
    assert classify_conic(conic) is ConicClass.HYPERBOLA


def test_multipliers_are_not_reduced(conic_points) -> None:
    details = conic_pencil_details(conic_points)
    lam, mu = solve_multipliers(details.pr, details.qs, conic_points[4])
    assert (lam, mu) == (494, 1064)
    assert lam * details.pr.evaluate(conic_points[4]) + mu * details.qs.evaluate(conic_points[4]) == 0


def test_flop_counts(conic_points) -> None:
    report = flop_report(conic_points)
    assert report.pencil_flops == 104
    assert report.det_flops == 3633
    assert 0.01 < report.ratio < 0.05


def test_oracle_counter_is_filled(conic_points) -> None:
    fc = FlopCounter()
    conic = conic_oracle_det(conic_points, fc)
    assert conic.coeffs == fixtures.CONIC_CANONICAL
    assert fc.total == 3633


def test_collinear_triple_is_relabeled() -> None:
    pts = _affine((0, 0), (1, 1), (2, 2), (0, 1), (1, 0))
    details = conic_pencil_details(pts)
    assert details.order != (0, 1, 2, 3, 4)
    assert details.conic.coeffs == (0, 1, -1, -2, 0, 2)
    assert classify_conic(details.conic) is ConicClass.DEGENERATE_PAIR
    with pytest.raises(DegenerateConfiguration):
        conic_pencil_details(pts, relabel=False)


def test_four_collinear_points_have_no_pencil() -> None:
    pts = _affine((0, 0), (1, 0), (2, 0), (3, 0), (0, 1))
    with pytest.raises(DegenerateConfiguration):
        conic_through_5(pts)


def test_duplicate_points_raise() -> None:
    pts = _affine((0, 0), (1, 0), (0, 1), (1, 1), (0, 0))
    with pytest.raises(DuplicatePoints):
        conic_through_5(pts)


@pytest.mark.parametrize(
    ("points", "expected"),
    [
        (((1, 0), (0, 1), (-1, 0), (0, -1), (Fraction(3, 5), Fraction(4, 5))), ConicClass.ELLIPSE),
        (((0, 0), (1, 1), (-1, 1), (2, 4), (-2, 4)), ConicClass.PARABOLA),
        (((1, 1), (2, Fraction(1, 2)), (-1, -1), (3, Fraction(1, 3)), (-2, Fraction(-1, 2))), ConicClass.HYPERBOLA),
        (((1, 0), (2, 0), (0, 1), (0, 2), (3, 0)), ConicClass.DEGENERATE_PAIR),
    ],
)
def test_classification(points, expected) -> None:
    assert classify_conic(conic_through_5(_affine(*points))) is expected


def test_classification_of_special_degenerate_forms() -> None:
    assert classify_conic(Conic((0, 0, 0, 1, 0, 0))) is ConicClass.DOUBLE_LINE
    assert classify_conic(Conic((0, 0, 0, 1, 0, 1))) is ConicClass.POINT_CONIC


def test_diagonal_pair_lies_in_the_pencil(conic_points) -> None:
    details = conic_pencil_details(conic_points)
    diagonal = third_pair(*conic_points[:4])
    assert all(diagonal.evaluate(p) == 0 for p in conic_points[:4])
    assert three_pair_rank([details.pr, details.qs, diagonal]) == 2


def test_pencil_matches_determinant_on_random_points() -> None:
    rng = random.Random(20240611)
    compared = 0
    for _ in range(1000):
        pts = _affine(*[(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(5)])
        try:
            pencil = conic_through_5(pts)
            oracle = conic_oracle_det(pts)
        except ValueError:
            continue
        assert pencil.coeffs == oracle.coeffs
        compared += 1
    assert compared > 900


def test_homogeneous_input_with_scaled_coordinates(conic_points) -> None:
    scaled = [HPoint2(tuple(3 * c for c in p.coords)) for p in conic_points]
    assert conic_through_5(scaled).coeffs == fixtures.CONIC_CANONICAL


def test_conic_does_not_depend_on_point_roles() -> None:
    rng = random.Random(41)
    checked = 0
    while checked < 100:
        pts = _affine(*[(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(5)])
        try:
            expected = conic_through_5(pts)
        except ValueError:
            continue
        for shift in range(1, 5):
            assert conic_through_5(pts[shift:] + pts[:shift]).coeffs == expected.coeffs
        shuffled = list(pts)
        rng.shuffle(shuffled)
        assert conic_through_5(shuffled).coeffs == expected.coeffs
        checked += 1


def test_classification_ignores_scale() -> None:
    rng = random.Random(43)
    for _ in range(200):
        coeffs = [rng.randint(-9, 9) for _ in range(6)]
        if not any(coeffs):
            continue
        conic = Conic(tuple(coeffs))
        expected = classify_conic(conic)
        for factor in (Fraction(-1), Fraction(7, 3), Fraction(-5, 11)):
            assert classify_conic(Conic(tuple(factor * c for c in coeffs))) is expected
