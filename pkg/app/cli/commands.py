from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable

import numpy as np

from app import config
from app.cli.selfcheck import run_fixture_suite
from app.cone.constraints import build_constraints
from app.cone.pair import cone_form, intersection_plane, recover_translation, shared_conic_check, translated_cone
from app.cone.solver import SolverConfig, mirror_pairs, solve
from app.cone.uvp import UvpFactor, classify_root, f16_no_real_roots_check
from app.conic.flops import flop_report
from app.conic.oracle import conic_oracle_det
from app.conic.pencil import classify_conic, conic_pencil_details
from app.documents.points import PointSetDocument, load_document
from app.documents.results import (
    conic_residuals,
    decimal,
    decimals,
    dumps,
    exact_list,
    placement_residuals,
    quadric_residuals,
    translation_residuals,
    write_result,
)
from app.errors import DocumentError, GeometryError, PointsOffCone, VerificationFailed
from app.jobs.manager import create_job, update_meta
from app.kinematics.dual_quaternion import dq_act_many
from app.plot.curves import write_conic_svg
from app.plot.meshes import write_cone_scene, write_quadric_mesh
from app.quadric.oracle import quadric_oracle_det
from app.quadric.pencil import enumerate_choices, quadric_pencil_details

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GEOMETRY = 2
EXIT_BUDGET = 3

Result = tuple[dict[str, Any], int]


def _echo(args: argparse.Namespace, **flags: Any) -> dict[str, Any]:
    return {"name": args.command, "input": getattr(args, "input", None), "flags": flags}


def _planar(doc: PointSetDocument) -> PointSetDocument:
    """Drop a vanishing z coordinate so 3D pentagons on z = 0 can feed 2D commands."""
    if doc.dimension == 2:
        return doc
    z = 3 if doc.homogeneous else 2
    if any(p[z] != 0 for p in doc.points):
        raise DocumentError("3D input must lie on z = 0 for a planar command")
    points = [p[:z] + p[z + 1 :] for p in doc.points]
    return PointSetDocument(dimension=2, homogeneous=doc.homogeneous, points=points, labels=list(doc.labels))


def _rounded(doc: dict[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in doc.items():
        if isinstance(v, bool) or v is None:
            out[k] = v
        elif isinstance(v, (list, tuple)):
            out[k] = decimals(v)
        else:
            out[k] = decimal(v)
    return out


def _spatial(doc: PointSetDocument) -> np.ndarray:
    pts = doc.affine()
    if doc.dimension == 2:
        pts = np.concatenate([pts, np.zeros((len(pts), 1))], axis=1)
    return pts


def cmd_conic5(args: argparse.Namespace) -> Result:
    doc = _planar(load_document(args.input).require(count=5, dimension=(2, 3)))
    pts = doc.hpoints2()
    details = conic_pencil_details(pts)
    conic = details.conic
    coeffs = exact_list(conic.coeffs)
    residuals = conic_residuals(coeffs, doc.homogeneous_coords())
    if any(residuals):
        raise VerificationFailed(f"conic residuals {exact_list(residuals)} are not zero")
    report = flop_report([pts[i] for i in details.order])
    out: dict[str, Any] = {
        "command": _echo(args, oracle=args.oracle, plot=args.plot),
        "points": doc.as_dict()["points"],
        "order": [doc.labels[i] for i in details.order],
        "lines": {name: exact_list(line.coords) for name, line in details.lines.items()},
        "multipliers": exact_list(details.multipliers),
        "conic": {"coeffs": coeffs, "monomials": exact_list(conic.monomials())},
        "class": classify_conic(conic).value,
        "residuals": exact_list(residuals),
        "flops": report.as_dict(),
    }
    if args.oracle:
        oracle = conic_oracle_det(pts)
        out["oracle"] = {"coeffs": exact_list(oracle.coeffs), "agrees": oracle.coeffs == conic.coeffs}
    if args.plot:
        title = f"{classify_conic(conic).value} on five points"
        finite, finite_labels = doc.finite()
        out["plot"] = str(write_conic_svg(Path(args.plot), conic, finite, finite_labels, title, args.samples))
    return out, EXIT_OK


def cmd_quadric9(args: argparse.Namespace) -> Result:
    doc = load_document(args.input).require(count=9, dimension=3)
    order = args.permute or list(range(9))
    if len(order) != 9:
        raise DocumentError(f"--permute needs 9 indices, got {len(order)}")
    pts = [doc.hpoints3()[i] for i in order]
    labels = [doc.labels[i] for i in order]
    choice = None
    if args.pairing is not None:
        choices = enumerate_choices()
        if not 0 <= args.pairing < len(choices):
            raise DocumentError(f"--pairing must be in 0..{len(choices) - 1}")
        choice = choices[args.pairing]
    details = quadric_pencil_details(pts, choice)
    quadric = details.quadric
    coeffs = exact_list(quadric.coeffs)
    residuals = quadric_residuals(coeffs, [p.coords for p in pts])
    if any(residuals):
        raise VerificationFailed(f"quadric residuals {exact_list(residuals)} are not zero")
    out: dict[str, Any] = {
        "command": _echo(args, oracle=args.oracle, pairing=args.pairing, permute=args.permute, mesh=args.mesh),
        "points": doc.as_dict()["points"],
        "roles": dict(zip("ABCDEFGHJ", labels)),
        "choice": [str(p) for p in details.choice],
        "planes": {name: exact_list(pl.coords) for name, pl in details.planes.items()},
        "system": [exact_list(row) for row in details.system],
        "multipliers": exact_list(details.multipliers),
        "quadric": {"coeffs": coeffs, "monomials": exact_list(quadric.monomials())},
        "residuals": exact_list(residuals),
    }
    if args.oracle:
        oracle = quadric_oracle_det(pts)
        out["oracle"] = {"coeffs": exact_list(oracle.coeffs), "agrees": oracle.coeffs == quadric.coeffs}
    if args.mesh:
        finite, finite_labels = doc.finite()
        out["mesh"] = str(write_quadric_mesh(Path(args.mesh), quadric, finite, finite_labels, args.resolution))
    return out, EXIT_OK


def cmd_place_cone(args: argparse.Namespace) -> Result:
    doc = load_document(args.input).require(count=5, dimension=(2, 3))
    pentagon = _spatial(doc)
    system = build_constraints(pentagon)
    cfg = SolverConfig.from_config().with_overrides(
        seed=args.seed,
        max_starts=args.max_starts,
        tol_residual=args.tol,
        tol_dedup=args.tol_dedup,
        early_stop_window=args.early_stop_window,
    )
    found = solve(system, cfg)
    classes = []
    for i, sol in enumerate(found.solutions):
        vector = decimals(sol.dq.vector(), 12)
        res = placement_residuals(vector, pentagon)
        worst = max(abs(r) for r in res)
        if worst > config.TOL_CONSTRAINT:
            raise VerificationFailed(f"class {i} re-verifies at residual {worst:.3g}")
        root = classify_root(sol.x0)
        classes.append(
            {
                "index": i,
                "dq": vector,
                "x0": decimal(sol.x0),
                "images": {
                    label: decimals(p) for label, p in zip(doc.labels, dq_act_many(sol.dq, pentagon))
                },
                "residual": decimal(worst, 3),
                "hits": sol.hits,
                "uvp": {"factor": root.factor.value, "scaled_residual": decimal(root.scaled_residual, 3)},
            }
        )
    pairs = mirror_pairs(found, pentagon)
    out: dict[str, Any] = {
        "command": _echo(
            args,
            seed=cfg.seed,
            max_starts=cfg.max_starts,
            tol=cfg.tol_residual,
            tol_dedup=cfg.tol_dedup,
            early_stop_window=cfg.early_stop_window,
        ),
        "points": doc.as_dict()["points"],
        "classes": classes,
        "mirror_pairs": [list(p) for p in pairs],
        "uvp": {
            "f16_no_real_roots": f16_no_real_roots_check(factor=UvpFactor.F16),
            "f16_as_printed_no_real_roots": f16_no_real_roots_check(factor=UvpFactor.F16_AS_PRINTED),
        },
        "solver": {
            "starts_used": found.starts_used,
            "converged": found.converged,
            "classes": len(found),
            "partial": found.partial,
        },
    }
    if found.partial:
        out["warning"] = "solver budget exhausted before the class count settled; results are partial"
        return out, EXIT_BUDGET
    return out, EXIT_OK


def cmd_cone_pair(args: argparse.Namespace) -> Result:
    doc = load_document(args.input).require(min_count=3, dimension=3)
    pts = doc.affine()
    tol = config.TOL_CONE_POINT if args.tol is None else args.tol
    off = np.abs(cone_form(pts))
    if np.any(off > tol):
        bad = [label for label, r in zip(doc.labels, off) if r > tol]
        raise PointsOffCone(f"points {bad} are off the cone x²+y²-z²=0 (tolerance {tol:g})")
    solutions = recover_translation(pts[0], pts[1], pts[2], tol=tol)
    t = solutions[-1]
    report = shared_conic_check(pts, t, tol=max(tol, config.TOL_SHARED_CONIC))
    check = translation_residuals(t, pts[:3])
    if max(abs(v) for v in check) > max(tol, config.TOL_SHARED_CONIC):
        raise VerificationFailed(f"translated cone residuals {check} exceed tolerance")
    out: dict[str, Any] = {
        "command": _echo(args, tol=tol, scene=args.scene),
        "points": doc.as_dict()["points"],
        "translations": [decimals(s) for s in solutions],
        "translation": decimals(t),
        "translated_cone": {k: decimal(v) for k, v in translated_cone(t).coefficients().items()},
        "shared_conic": _rounded(report.as_dict()),
    }
    if np.any(t):
        out["intersection_plane"] = decimals(intersection_plane(t).coeffs)
    if args.scene:
        out["scene"] = str(write_cone_scene(Path(args.scene), t, pts, doc.labels, args.resolution))
    return out, EXIT_OK


def cmd_selfcheck(args: argparse.Namespace) -> Result:
    cfg = SolverConfig.from_config().with_overrides(seed=args.seed, max_starts=args.max_starts)
    checks = run_fixture_suite(cfg, skip_solver=args.skip_solver)
    passed = all(c["passed"] for c in checks)
    out = {
        "command": _echo(args, skip_solver=args.skip_solver, seed=cfg.seed, max_starts=cfg.max_starts),
        "checks": checks,
        "passed": passed,
    }
    return out, EXIT_OK if passed else EXIT_GEOMETRY


COMMANDS: dict[str, Callable[[argparse.Namespace], Result]] = {
    "conic5": cmd_conic5,
    "quadric9": cmd_quadric9,
    "place-cone": cmd_place_cone,
    "cone-pair": cmd_cone_pair,
    "selfcheck": cmd_selfcheck,
}


def run(args: argparse.Namespace, stdout=None) -> int:
    stdout = stdout or sys.stdout
    job = create_job(Path(args.output), args.command) if getattr(args, "output", None) else None
    if job:
        update_meta(job.meta_path, {"job_id": job.job_id, "state": "running", "command": args.command})
    started = time.perf_counter()
    try:
        doc, code = COMMANDS[args.command](args)
    except DocumentError as exc:
        logger.error("input error: %s", exc)
        doc, code = {"command": _echo(args), "error": "DocumentError", "reason": str(exc)}, EXIT_INPUT
    except GeometryError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        doc, code = {"command": _echo(args), "error": type(exc).__name__, "reason": str(exc)}, EXIT_GEOMETRY
    stdout.write(dumps(doc))
    if job:
        write_result(job.result_json, doc)
        update_meta(
            job.meta_path,
            {
                "state": "done" if code == EXIT_OK else "failed",
                "exit_code": code,
                "elapsed_s": round(time.perf_counter() - started, 3),
            },
        )
    return code
