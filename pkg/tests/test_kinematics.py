from __future__ import annotations

import numpy as np
import pytest
from scipy.spatial.transform import Rotation

from app import config, fixtures
from app.errors import BadPentagon, DegenerateSource, InvalidDisplacement
from app.kinematics import (
    DualQuaternion,
    Relation,
    compare_solutions,
    dq_act,
    dq_act_many,
    in_plane_coordinates,
    norm_condition,
    study_condition,
)
from app.kinematics.compare import image_plane_normal


def test_first_worked_displacement(pentagon) -> None:
    q = DualQuaternion.from_vector(fixtures.DQ_FIRST)
    images = dq_act_many(q, pentagon)
    assert np.max(np.abs(images - np.array(fixtures.DQ_FIRST_IMAGES))) < config.TOL_PRINTED


def test_second_worked_displacement(pentagon) -> None:
    q = DualQuaternion.from_vector(fixtures.DQ_SECOND)
    images = dq_act_many(q, pentagon)
    assert np.max(np.abs(images - np.array(fixtures.DQ_SECOND_IMAGES))) < config.TOL_PRINTED_LOOSE


def test_printed_first_displacement_is_not_a_rigid_motion(pentagon) -> None:
    q = DualQuaternion.from_vector(fixtures.DQ_FIRST_PRINTED)
    assert abs(norm_condition(q)) > config.TOL_DISPLACEMENT
    with pytest.raises(InvalidDisplacement):
        dq_act_many(q, pentagon)


def test_identity_and_sign_do_not_move_points(pentagon) -> None:
    assert np.allclose(dq_act_many(DualQuaternion.identity(), pentagon), pentagon)
    q = DualQuaternion.from_vector(fixtures.DQ_SECOND)
    assert np.allclose(dq_act_many(-q, pentagon), dq_act_many(q, pentagon))


def test_rotation_then_translation_matches_scipy() -> None:
    rot = Rotation.from_euler("xyz", [0.3, -0.2, 1.1])
    t = np.array([1.0, 2.0, -3.0])
    q = DualQuaternion.from_rotation(rot, t)
    pts = np.random.default_rng(5).normal(size=(6, 3))
    assert np.allclose(dq_act_many(q, pts), rot.apply(pts) + t)
    assert np.allclose(q.rotation_matrix(), rot.as_matrix())
    assert np.allclose(q.translation(), t)
    assert abs(norm_condition(q)) < 1e-12 and abs(study_condition(q)) < 1e-12


def test_product_acts_right_factor_first() -> None:
    a = DualQuaternion.from_rotation(Rotation.from_rotvec([0.0, 0.4, 0.1]), [0.5, 0.0, 1.0])
    b = DualQuaternion.from_rotation(Rotation.from_rotvec([1.0, 0.0, -0.2]), [0.0, -2.0, 0.3])
    p = np.array([0.7, -1.2, 2.0])
    assert np.allclose(dq_act(a * b, p), dq_act(a, dq_act(b, p)))


def test_half_turn() -> None:
    q = DualQuaternion.half_turn([0.0, 0.0, 2.0])
    assert np.allclose(dq_act(q, [1.0, 2.0, 3.0]), [-1.0, -2.0, 3.0])


def test_bad_vectors_are_rejected() -> None:
    with pytest.raises(ValueError):
        DualQuaternion.from_vector([1.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        DualQuaternion.from_vector([np.nan] + [0.0] * 7)


def test_solution_compared_with_itself_is_direct(pentagon) -> None:
    q = DualQuaternion.from_vector(fixtures.DQ_FIRST)
    cmp = compare_solutions(q, q, pentagon, displacement_tol=config.TOL_DISPLACEMENT)
    assert cmp.relation is Relation.DIRECT_PAIR
    assert cmp.determinant == 1
    assert cmp.residual < 1e-9


def test_printed_solutions_are_unrelated(pentagon) -> None:
    cmp = compare_solutions(
        DualQuaternion.from_vector(fixtures.DQ_FIRST),
        DualQuaternion.from_vector(fixtures.DQ_SECOND),
        pentagon,
        displacement_tol=config.TOL_DISPLACEMENT,
    )
    assert cmp.relation is Relation.UNRELATED
    assert cmp.anchor_distance > 1.0


def test_in_plane_frame_follows_rotation_about_the_axis(pentagon) -> None:
    q = DualQuaternion.from_vector(fixtures.DQ_SECOND)
    images = dq_act_many(q, pentagon)
    normal = image_plane_normal(q)
    turn = Rotation.from_rotvec([0.0, 0.0, 0.9])
    before = in_plane_coordinates(images, normal)
    after = in_plane_coordinates(turn.apply(images), turn.apply(normal))
    assert np.allclose(before, after)
    assert np.allclose(before[0], 0.0)


def test_in_plane_coordinates_keep_distances(pentagon) -> None:
    q = DualQuaternion.from_vector(fixtures.DQ_FIRST)
    images = dq_act_many(q, pentagon)
    flat = in_plane_coordinates(images, image_plane_normal(q))
    d_src = np.linalg.norm(pentagon[:, None, :2] - pentagon[None, :, :2], axis=-1)
    d_img = np.linalg.norm(flat[:, None] - flat[None, :], axis=-1)
    assert np.max(np.abs(d_src - d_img)) < 1e-2


def test_source_must_be_planar_and_spread(pentagon) -> None:
    q = DualQuaternion.identity()
    lifted = pentagon.copy()
    lifted[2, 2] = 1.0
    with pytest.raises(BadPentagon):
        compare_solutions(q, q, lifted)
    line = np.array([[i, 2.0 * i, 0.0] for i in range(5)])
    with pytest.raises(DegenerateSource):
        compare_solutions(q, q, line)


def _random_displacement(rng: np.random.Generator) -> DualQuaternion:
    x = rng.normal(size=4)
    x /= np.linalg.norm(x)
    y = rng.normal(scale=2.0, size=4)
    y -= (x @ y) * x
    return DualQuaternion(tuple(x), tuple(y))


def test_random_displacements_are_rigid() -> None:
    rng = np.random.default_rng(17)
    for _ in range(100):
        q = _random_displacement(rng)
        pts = rng.uniform(-5.0, 5.0, size=(7, 3))
        images = dq_act_many(q, pts)
        d_src = np.linalg.norm(pts[:, None] - pts[None, :], axis=-1)
        d_img = np.linalg.norm(images[:, None] - images[None, :], axis=-1)
        assert np.max(np.abs(d_src - d_img)) < 1e-9
        assert np.allclose(images, pts @ q.rotation_matrix().T + q.translation(), atol=1e-9)
