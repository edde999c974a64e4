from __future__ import annotations

import numpy as np

from app import fixtures
from app.conic import conic_through_5
from app.plot import conic_curves, implicit_mesh, plot_bounds, quadric_field, write_cone_scene, write_conic_svg
from app.projective import HPoint2, HPoint3
from app.quadric import quadric_through_9


def test_conic_contour_passes_near_the_points() -> None:
    pts = np.array(fixtures.CONIC_POINTS, dtype=float)
    conic = conic_through_5([HPoint2.affine(*p) for p in fixtures.CONIC_POINTS])
    lo, hi = plot_bounds(pts)
    curves = conic_curves(conic, lo, hi, samples=400)
    assert curves
    traced = np.vstack(curves)
    for p in pts:
        assert np.min(np.linalg.norm(traced - p, axis=1)) < 0.1


def test_svg_output_is_reproducible(tmp_path) -> None:
    pts = np.array(fixtures.CONIC_POINTS, dtype=float)
    conic = conic_through_5([HPoint2.affine(*p) for p in fixtures.CONIC_POINTS])
    a = write_conic_svg(tmp_path / "a.svg", conic, pts, fixtures.CONIC_LABELS, "Ellipse", samples=64)
    b = write_conic_svg(tmp_path / "b.svg", conic, pts, fixtures.CONIC_LABELS, "Ellipse", samples=64)
    assert a.read_bytes() == b.read_bytes()
    assert b"<svg" in a.read_bytes()


def test_quadric_mesh_lies_on_the_surface() -> None:
    quadric = quadric_through_9([HPoint3.affine(*p) for p in fixtures.QUADRIC_POINTS])
    field = quadric_field(quadric)
    mesh = implicit_mesh("quadric", field, np.array([-5.0, -5.0, -5.0]), np.array([15.0, 15.0, 10.0]), 24)
    assert len(mesh.faces) > 0
    v = mesh.vertices
    values = field(v[:, 0], v[:, 1], v[:, 2])
    assert np.max(np.abs(values)) < 0.05


def test_cone_scene_has_both_cones_and_markers(tmp_path) -> None:
    pts = np.array(fixtures.CONE_PAIR_POINTS)
    path = write_cone_scene(tmp_path / "scene.obj", fixtures.CONE_TRANSLATION, pts, ["A", "B", "C"], resolution=16)
    text = path.read_text(encoding="utf-8")
    for name in ("o origin_cone", "o translated_cone", "o intersection_plane", "o markers"):
        assert name in text
    assert "# B" in text
