"""Shared test helpers: random state batches and cached reference runs."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from lorenz_covering.dynamics.models import CartesianState, SystemSpec
from lorenz_covering.integrate.models import IntegratorConfig, Trajectory
from lorenz_covering.integrate.solver import simulate

START = CartesianState(1.0, 0.1, 0.5)
TIGHT = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-12)


def random_states(
    rng: np.random.Generator,
    n: int,
    r_min: float = 0.05,
    r_max: float = 3.0,
    z_max: float = 3.0,
) -> np.ndarray:
    """(3, n) batch of Cartesian states with radius in [r_min, r_max] and |z| <= z_max."""
    r = rng.uniform(r_min, r_max, n)
    phi = rng.uniform(0.0, 2.0 * math.pi, n)
    z = rng.uniform(-z_max, z_max, n)
    return np.array([r * np.cos(phi), r * np.sin(phi), z])


def rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


@lru_cache(maxsize=None)
def l2_run(t1: float = 60.0, transient: float = 20.0) -> Trajectory:
    """Canonical L2 trajectory with the transient removed (cached per session)."""
    traj = simulate(SystemSpec.l2(), START, 0.0, t1, TIGHT)
    return traj.slice_time(transient)
