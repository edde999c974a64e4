from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from app import fixtures
from app.cone.constraints import build_constraints
from app.cone.solver import SolverConfig, solve
from app.projective.core import HPoint2, HPoint3


@pytest.fixture
def conic_points() -> list[HPoint2]:
    return [HPoint2.affine(*p) for p in fixtures.CONIC_POINTS]


@pytest.fixture
def quadric_points() -> list[HPoint3]:
    return [HPoint3.affine(*p) for p in fixtures.QUADRIC_POINTS]


@pytest.fixture
def pentagon() -> np.ndarray:
    return np.array([(x, y, 0.0) for x, y in fixtures.PENTAGON])


@pytest.fixture(scope="session")
def solved():
    """One full cone placement solve with the default seed, shared by the slow tests."""
    source = np.array([(x, y, 0.0) for x, y in fixtures.PENTAGON])
    return solve(build_constraints(source), SolverConfig.from_config())


def write_points(path: Path, points, labels, dimension: int) -> Path:
    lines = [f"dimension: {dimension}", "homogeneous: false"]
    lines += [f"{label} " + " ".join(str(c) for c in p) for label, p in zip(labels, points)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
