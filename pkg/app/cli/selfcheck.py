"""
Fixture suite behind the `selfcheck` command.

Every check reruns one worked example from app.fixtures and reports a flat
record {"name", "passed", "detail"}; a failing check never stops the others.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from app import config, fixtures
from app.cone.constraints import build_constraints
from app.cone.pair import intersection_plane, recover_translation, shared_conic_check
from app.cone.solver import SolverConfig, mirror_pairs, solve
from app.cone.uvp import UvpFactor, f16_no_real_roots_check, nearest_real_root
from app.conic.flops import flop_report
from app.conic.oracle import conic_oracle_det
from app.conic.pencil import Conic, conic_pencil_details
from app.errors import GeometryError, InvalidDisplacement
from app.kinematics.compare import Relation, compare_solutions
from app.kinematics.dual_quaternion import DualQuaternion, dq_act_many
from app.projective.core import HPoint2, HPoint3
from app.quadric.oracle import quadric_oracle_det
from app.quadric.pencil import Quadric, quadric_pencil_details

logger = logging.getLogger(__name__)

Check = Callable[[], tuple[bool, Any]]


def _fractions(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def _pentagon3() -> np.ndarray:
    return np.array([(x, y, 0.0) for x, y in fixtures.PENTAGON], dtype=float)


def _conic_points() -> list[HPoint2]:
    return [HPoint2.affine(*p) for p in fixtures.CONIC_POINTS]


def _quadric_points() -> list[HPoint3]:
    return [HPoint3.affine(*p) for p in fixtures.QUADRIC_POINTS]


def check_conic_pencil() -> tuple[bool, Any]:
    details = conic_pencil_details(_conic_points())
    lines_ok = all(details.lines[k].coords == _fractions(v) for k, v in fixtures.CONIC_LINES.items())
    mult_ok = details.multipliers == _fractions(fixtures.CONIC_MULTIPLIERS)
    conic_ok = details.conic.coeffs == _fractions(fixtures.CONIC_CANONICAL)
    printed_ok = Conic.from_monomials(fixtures.CONIC_PRINTED_MONOMIALS).same_as(details.conic)
    detail = {"lines": lines_ok, "multipliers": mult_ok, "conic": conic_ok, "printed_form": printed_ok}
    return all(detail.values()), detail


def check_conic_oracle() -> tuple[bool, Any]:
    pts = _conic_points()
    report = flop_report(pts)
    agrees = conic_oracle_det(pts).coeffs == _fractions(fixtures.CONIC_CANONICAL)
    ok = agrees and report.pencil_flops == 104 and report.det_flops == 3633
    return ok, {"agrees": agrees, "pencil_flops": report.pencil_flops, "det_flops": report.det_flops}


def check_quadric_pencil() -> tuple[bool, Any]:
    details = quadric_pencil_details(_quadric_points())
    planes_ok = all(details.planes[k].coords == _fractions(v) for k, v in fixtures.QUADRIC_PLANES.items())
    system_ok = details.system == tuple(_fractions(row) for row in fixtures.QUADRIC_SYSTEM)
    mult_ok = details.multipliers == _fractions(fixtures.QUADRIC_MULTIPLIERS)
    printed_ok = Quadric.from_monomials(fixtures.QUADRIC_PRINTED_MONOMIALS).same_as(details.quadric)
    detail = {"planes": planes_ok, "system": system_ok, "multipliers": mult_ok, "printed_form": printed_ok}
    return all(detail.values()), detail


def check_quadric_oracle() -> tuple[bool, Any]:
    pts = _quadric_points()
    agrees = quadric_oracle_det(pts).coeffs == quadric_pencil_details(pts).quadric.coeffs
    return agrees, {"agrees": agrees}


def _image_error(dq: tuple, expected: list) -> float:
    images = dq_act_many(DualQuaternion.from_vector(dq), _pentagon3())
    return float(np.max(np.abs(images - np.array(expected))))


def check_dual_quaternions() -> tuple[bool, Any]:
    first = _image_error(fixtures.DQ_FIRST, fixtures.DQ_FIRST_IMAGES)
    second = _image_error(fixtures.DQ_SECOND, fixtures.DQ_SECOND_IMAGES)
    try:
        _image_error(fixtures.DQ_FIRST_PRINTED, fixtures.DQ_FIRST_IMAGES)
        printed_rejected = False
    except InvalidDisplacement:
        printed_rejected = True
    ok = first < config.TOL_PRINTED and second < config.TOL_PRINTED_LOOSE and printed_rejected
    return ok, {"first_error": first, "second_error": second, "printed_first_rejected": printed_rejected}


def check_uvp_factors() -> tuple[bool, Any]:
    def worst(roots, factor) -> float:
        gaps = []
        for r in roots:
            near = nearest_real_root(r, factor)
            gaps.append(np.inf if near is None else abs(near - r))
        return float(max(gaps))

    f8a = worst(fixtures.ROOT_TABLE_F8A, UvpFactor.F8A)
    f8b = worst(fixtures.ROOT_TABLE_F8B, UvpFactor.F8B)
    f8b_printed = worst(fixtures.ROOT_TABLE_F8B, UvpFactor.F8B_AS_PRINTED)
    f16 = f16_no_real_roots_check(factor=UvpFactor.F16)
    f16_printed = f16_no_real_roots_check(factor=UvpFactor.F16_AS_PRINTED)
    ok = f8a < config.TOL_PRINTED and f8b < config.TOL_PRINTED and f8b_printed > config.TOL_PRINTED and f16
    detail = {
        "f8a_gap": f8a,
        "f8b_gap": f8b,
        "f8b_as_printed_gap": None if np.isinf(f8b_printed) else f8b_printed,
        "f16_no_real_roots": f16,
        "f16_as_printed_no_real_roots": f16_printed,
    }
    return ok and not f16_printed, detail


def check_cone_pair() -> tuple[bool, Any]:
    pts = np.array(fixtures.CONE_PAIR_POINTS, dtype=float)
    t = recover_translation(*pts)[-1]
    report = shared_conic_check(pts, t)
    t_err = float(np.max(np.abs(t - np.array(fixtures.CONE_TRANSLATION))))
    plane = np.array(intersection_plane(t).coeffs)
    plane_err = float(np.max(np.abs(plane - np.array(fixtures.TRANSLATED_CONE_LINEAR))))
    factor_err = abs((report.plane_factor or 0.0) - fixtures.PLANE_FACTOR)
    ok = t_err < config.TOL_PRINTED_LOOSE and plane_err < 1e-2 and factor_err < config.TOL_PRINTED_LOOSE
    return ok, {"translation_error": t_err, "plane_error": plane_err, "plane_factor": report.plane_factor}


def make_solver_check(cfg: SolverConfig) -> Check:
    def check_cone_placement() -> tuple[bool, Any]:
        source = _pentagon3()
        found = solve(build_constraints(source), cfg)
        x0 = found.x0_values()
        expected = sorted(fixtures.ROOT_TABLE, reverse=True)
        roots_ok = len(x0) == len(expected) and all(
            abs(a - b) < config.TOL_PRINTED_LOOSE for a, b in zip(x0, expected)
        )
        pairs = mirror_pairs(found, source)
        printed = compare_solutions(
            DualQuaternion.from_vector(fixtures.DQ_FIRST),
            DualQuaternion.from_vector(fixtures.DQ_SECOND),
            source,
            displacement_tol=config.TOL_DISPLACEMENT,
        )
        ok = roots_ok and len(pairs) == 4 and not found.partial and printed.relation is Relation.UNRELATED
        detail = {
            "classes": len(x0),
            "x0": [round(v, 4) for v in x0],
            "mirror_pairs": [list(p) for p in pairs],
            "printed_pair": printed.relation.value,
            "partial": found.partial,
        }
        return ok, detail

    return check_cone_placement


def run_fixture_suite(cfg: SolverConfig | None = None, skip_solver: bool = False) -> list[dict[str, Any]]:
    checks: list[Check] = [
        check_conic_pencil,
        check_conic_oracle,
        check_quadric_pencil,
        check_quadric_oracle,
        check_dual_quaternions,
        check_uvp_factors,
        check_cone_pair,
    ]
    if not skip_solver:
        checks.append(make_solver_check(cfg or SolverConfig.from_config()))
    out = []
    for check in checks:
        name = check.__name__.removeprefix("check_")
        try:
            passed, detail = check()
        except GeometryError as exc:
            passed, detail = False, {"error": type(exc).__name__, "reason": str(exc)}
        if not passed:
            logger.warning("selfcheck %s failed: %s", name, detail)
        out.append({"name": name, "passed": bool(passed), "detail": detail})
    return out
