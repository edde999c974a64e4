"""
Runtime configuration.

Tolerances and solver defaults live here as plain module constants.

Notes:
  - Prefer creating a local `config_local.py` (not committed) to override values.
  - CLI flags override the solver fields per run; nothing here is read from the environment.
"""

from __future__ import annotations

# Comparisons against values printed with 4 decimals
TOL_PRINTED = 5e-4
TOL_PRINTED_LOOSE = 1e-3

# Internal self-consistency
TOL_SELF = 1e-9
TOL_CONSTRAINT = 1e-8

# Kinematics
TOL_DISPLACEMENT = 2e-3  # norm / Study residual gate for dq_act
TOL_COMPARE = 1e-6

# Cone pair
TOL_CONE_POINT = 1e-3
TOL_SHARED_CONIC = 2e-2

# Cone placement solver
SOLVER_SEED = 20240611
SOLVER_MAX_STARTS = 2000
SOLVER_TOL_RESIDUAL = 1e-10
SOLVER_TOL_DEDUP = 1e-6
SOLVER_EARLY_STOP_WINDOW = 500
SOLVER_Y_RADIUS = 5.0
SOLVER_BATCH_SIZE = 100
SOLVER_MAX_ITERATIONS = 60

# Plot / mesh emitters
PLOT_SAMPLES = 512
MESH_RESOLUTION = 64

# Optional: local overrides (not committed)
try:  # pragma: no cover
    from config_local import *  # type: ignore  # noqa: F401,F403
except Exception:  # pragma: no cover
    pass
