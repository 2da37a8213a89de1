"""Shared fixtures for the lorenz_covering test suite."""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from helpers import START, TIGHT, l2_run, random_states, rotation  # type: ignore[import]

from lorenz_covering.dynamics.models import NormalizedParams, StandardParams, SystemSpec
from lorenz_covering.integrate.models import Trajectory

__all__ = ["START", "TIGHT", "l2_run", "random_states", "rotation"]


# ── Parameters ────────────────────────────────────────────────────────────────


@pytest.fixture()
def standard_params() -> StandardParams:
    return StandardParams.canonical()


@pytest.fixture()
def normalized_params() -> NormalizedParams:
    return NormalizedParams.canonical()


@pytest.fixture()
def l2_spec() -> SystemSpec:
    return SystemSpec.l2()


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


# ── Trajectories ──────────────────────────────────────────────────────────────


@pytest.fixture()
def l2_trajectory() -> Trajectory:
    return l2_run()


@pytest.fixture()
def small_trajectory() -> Trajectory:
    """Five hand-written Cartesian samples, off-axis throughout."""
    return Trajectory(
        times=np.array([0.0, 0.1, 0.2, 0.3, 0.4]),
        states=np.array([
            [1.0, 0.0, 0.5],
            [0.9, 0.3, 0.6],
            [0.7, 0.6, 0.7],
            [0.4, 0.8, 0.7],
            [0.1, 0.9, 0.6],
        ]),
        meta={"system": SystemSpec.l2().model_dump(mode="json")},
    )


# ── Paths ─────────────────────────────────────────────────────────────────────


@pytest.fixture()
def out_dir(tmp_path: Path) -> Path:
    d = tmp_path / "out"
    d.mkdir()
    return d
