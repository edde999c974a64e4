from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass, field

import numpy as np

from app import config
from app.cone.constraints import ConstraintSystem
from app.kinematics.compare import Relation, compare_solutions
from app.kinematics.dual_quaternion import DualQuaternion

logger = logging.getLogger(__name__)

_DIVERGED = 1e12
_BACKTRACK_STEPS = 20


@dataclass(frozen=True)
class SolverConfig:
    seed: int
    max_starts: int
    tol_residual: float
    tol_dedup: float
    early_stop_window: int
    y_radius: float = 5.0
    batch_size: int = 100
    max_iterations: int = 60

    @classmethod
    def from_config(cls) -> "SolverConfig":
        return cls(
            seed=int(config.SOLVER_SEED),
            max_starts=int(config.SOLVER_MAX_STARTS),
            tol_residual=float(config.SOLVER_TOL_RESIDUAL),
            tol_dedup=float(config.SOLVER_TOL_DEDUP),
            early_stop_window=int(config.SOLVER_EARLY_STOP_WINDOW),
            y_radius=float(config.SOLVER_Y_RADIUS),
            batch_size=int(config.SOLVER_BATCH_SIZE),
            max_iterations=int(config.SOLVER_MAX_ITERATIONS),
        )

    def with_overrides(self, **overrides) -> "SolverConfig":
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})


@dataclass(frozen=True)
class Solution:
    dq: DualQuaternion
    residual: float
    hits: int

    @property
    def x0(self) -> float:
        return self.dq.x[0]


@dataclass
class SolutionSet:
    solutions: list[Solution]
    starts_used: int
    converged: int
    partial: bool
    seed: int
    first_seen: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.solutions)

    def x0_values(self) -> list[float]:
        return [s.x0 for s in self.solutions]


def canonical_sign(v: np.ndarray, eps: float = 1e-12) -> np.ndarray:
    """Representative of {v, -v}: x0 > 0, else first nonzero entry positive."""
    for c in v:
        if abs(c) > eps:
            return v if c > 0 else -v
    return v


def draw_starts(rng: np.random.Generator, n: int, y_radius: float) -> np.ndarray:
    x = rng.normal(size=(n, 4))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    d = rng.normal(size=(n, 4))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    r = y_radius * rng.uniform(size=(n, 1)) ** 0.25
    return np.concatenate([x, d * r], axis=1)


def _newton_steps(jac: np.ndarray, res: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.solve(jac, res[..., None])[..., 0]
    except np.linalg.LinAlgError:
        out = np.empty_like(res)
        for i in range(len(res)):
            out[i] = np.linalg.lstsq(jac[i], res[i], rcond=None)[0]
        return out


def newton_batch(system: ConstraintSystem, starts: np.ndarray, cfg: SolverConfig) -> tuple[np.ndarray, np.ndarray]:
    """Damped Newton with backtracking on each row; returns (points, converged mask)."""
    s = np.array(starts, dtype=float)
    converged = np.zeros(len(s), dtype=bool)
    active = np.ones(len(s), dtype=bool)
    for _ in range(cfg.max_iterations):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        cur = s[idx]
        res = system.residuals(cur)
        size = np.max(np.abs(res), axis=1)
        done = size < cfg.tol_residual
        converged[idx[done]] = True
        bad = ~np.isfinite(size) | (size > _DIVERGED)
        active[idx[done | bad]] = False
        keep = ~(done | bad)
        idx, cur, res = idx[keep], cur[keep], res[keep]
        if idx.size == 0:
            break
        step = _newton_steps(system.jacobian(cur), res)
        base = np.linalg.norm(res, axis=1)
        t = np.ones(len(idx))
        accepted = np.zeros(len(idx), dtype=bool)
        for _ in range(_BACKTRACK_STEPS):
            trial = ~accepted
            if not trial.any():
                break
            cand = cur[trial] - t[trial, None] * step[trial]
            ok = np.linalg.norm(system.residuals(cand), axis=1) < base[trial]
            rows = np.flatnonzero(trial)
            cur[rows[ok]] = cand[ok]
            accepted[rows[ok]] = True
            t[rows[~ok]] *= 0.5
        s[idx] = cur
        # stalled rows get one more chance only if already at the tolerance
        stalled = idx[~accepted]
        if stalled.size:
            final = np.max(np.abs(system.residuals(s[stalled])), axis=1) < cfg.tol_residual
            converged[stalled[final]] = True
            active[stalled] = False
    idx = np.flatnonzero(active)
    if idx.size:
        converged[idx] = np.max(np.abs(system.residuals(s[idx])), axis=1) < cfg.tol_residual
    return s, converged


def solve(system: ConstraintSystem, cfg: SolverConfig | None = None) -> SolutionSet:
    cfg = cfg or SolverConfig.from_config()
    rng = np.random.default_rng(cfg.seed)
    reps: list[np.ndarray] = []
    hits: list[int] = []
    first_seen: list[int] = []
    processed = 0
    converged_total = 0
    last_new = -1
    stable = False
    while processed < cfg.max_starts:
        n = min(cfg.batch_size, cfg.max_starts - processed)
        pts, ok = newton_batch(system, draw_starts(rng, n, cfg.y_radius), cfg)
        for j in np.flatnonzero(ok):
            v = canonical_sign(pts[j])
            converged_total += 1
            for k, r in enumerate(reps):
                if np.linalg.norm(r - v) < cfg.tol_dedup:
                    hits[k] += 1
                    break
            else:
                reps.append(v)
                hits.append(1)
                first_seen.append(processed + int(j))
                last_new = processed + int(j)
        processed += n
        logger.debug("starts %d, converged %d, classes %d", processed, converged_total, len(reps))
        if reps and processed - (last_new + 1) >= cfg.early_stop_window:
            stable = True
            break
    if not stable:
        logger.warning(
            "solver budget of %d starts exhausted before the class count settled (%d classes)",
            cfg.max_starts,
            len(reps),
        )
    order = sorted(range(len(reps)), key=lambda k: (-reps[k][0], tuple(reps[k])))
    solutions = [
        Solution(
            dq=DualQuaternion.from_vector(reps[k]),
            residual=float(np.max(np.abs(system.residuals(reps[k])))),
            hits=hits[k],
        )
        for k in order
    ]
    return SolutionSet(
        solutions=solutions,
        starts_used=processed,
        converged=converged_total,
        partial=not stable,
        seed=cfg.seed,
        first_seen=[first_seen[k] for k in order],
    )


def mirror_pairs(solutions: SolutionSet, source: np.ndarray, tol: float | None = None) -> list[tuple[int, int]]:
    """Index pairs (i < j) of classes whose image pentagons are in-plane mirrors."""
    out = []
    sols = solutions.solutions
    for i in range(len(sols)):
        for j in range(i + 1, len(sols)):
            cmp = compare_solutions(sols[i].dq, sols[j].dq, source, tol=tol)
            if cmp.relation is Relation.MIRRORED_PAIR:
                out.append((i, j))
    return out
