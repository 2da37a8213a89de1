"""
Trajectory-level covering: forward coloring, continuous lifting, and
transfer between members of the class.

Polar trajectories keep their unwrapped angle: covering multiplies it by n
and lifting divides the downstairs increments by n, so no sheet decision is
ever taken from a reduced angle except for the initial color.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from lorenz_covering.covering.cover import TWO_PI, color_array, cover_xy
from lorenz_covering.covering.models import COLOR_CONVENTION
from lorenz_covering.dynamics.models import CoordKind
from lorenz_covering.errors import (
    AmbiguousLiftError,
    AxisDomainError,
    ParameterDomainError,
    TrajectoryFormatError,
)
from lorenz_covering.integrate.models import Trajectory

log = logging.getLogger(__name__)


def _require_fold(n: int) -> None:
    if n < 1:
        raise ParameterDomainError(f"fold count n must be >= 1, got n={n}")


def _planar_radius(traj: Trajectory) -> np.ndarray:
    if traj.coords == CoordKind.polar:
        return traj.states[:, 0]
    return np.hypot(traj.states[:, 0], traj.states[:, 1])


def _check_off_axis(traj: Trajectory) -> None:
    radius = _planar_radius(traj)
    on_axis = ~(radius > 0.0)
    if np.any(on_axis):
        idx = int(np.argmax(on_axis))
        raise AxisDomainError(
            "trajectory touches the z-axis where the covering is undefined",
            index=idx,
            time=float(traj.times[idx]),
            state=traj.states[idx],
        )


def _retag_system(meta: dict, n: int, lifting: bool) -> dict:
    """Move the 'system' tag from Lm to L(m/n) (cover) or L(m*n) (lift) when it applies."""
    out = dict(meta)
    system = meta.get("system")
    if not isinstance(system, dict) or system.get("family") == "standard":
        out.pop("system", None)
        return out
    m = {"l2": 2, "l1": 1}.get(system.get("family"), system.get("n"))
    if m is None:
        return out
    if lifting:
        target = m * n
    elif m % n == 0:
        target = m // n
    else:
        out.pop("system", None)
        return out
    out["source_system"] = system
    out["system"] = {**system, **_family_of(target)}
    return out


def _family_of(fold: int) -> dict:
    if fold == 1:
        return {"family": "l1", "n": None}
    if fold == 2:
        return {"family": "l2", "n": None}
    return {"family": "ln", "n": fold}


# ── Forward coloring ──────────────────────────────────────────────────────────

def cover_trajectory(traj: Trajectory, n: int) -> Trajectory:
    """
    Map every sample through the n-fold covering and attach its color.

    Timestamps are preserved; the output keeps the input's coordinate kind.
    """
    _require_fold(n)
    _check_off_axis(traj)
    s = traj.states
    if traj.coords == CoordKind.polar:
        states = np.column_stack([s[:, 0], n * s[:, 1], s[:, 2]])
        reduced = np.mod(s[:, 1], TWO_PI)
        colors = np.clip(np.floor(n * reduced / TWO_PI).astype(np.int64), 0, n - 1)
    else:
        x1, y1 = cover_xy(s[:, 0], s[:, 1], n)
        states = np.column_stack([x1, y1, s[:, 2]])
        colors = color_array(s[:, 0], s[:, 1], n)

    meta = _retag_system(traj.meta, n, lifting=False)
    meta.update({"covering_fold": n, "color_convention": COLOR_CONVENTION})
    log.debug("Covered %d samples with fold %d", len(traj), n)
    return Trajectory(times=traj.times, states=states, coords=traj.coords, colors=colors, meta=meta)


def factor_trajectory(traj: Trajectory, n: int = 2) -> Trajectory:
    """Cover and then erase the colors (the quotient trajectory alone)."""
    covered = cover_trajectory(traj, n)
    meta = {k: v for k, v in covered.meta.items() if k != "color_convention"}
    return Trajectory(times=covered.times, states=covered.states, coords=covered.coords, meta=meta)


# ── Lifting ───────────────────────────────────────────────────────────────────

def lift_trajectory(traj: Trajectory, n: int, initial_color: int = 0) -> Trajectory:
    """
    Continuous lift of a downstairs trajectory through the n-fold covering.

    The first sample goes to sheet `initial_color`; every later sample takes
    the preimage nearest to the previous lifted angle.

    Raises:
        AxisDomainError:    a sample lies on the z-axis.
        AmbiguousLiftError: consecutive downstairs angles differ by >= pi/n.
        TrajectoryFormatError: the trajectory has no samples.
    """
    _require_fold(n)
    if not 0 <= initial_color < n:
        raise ParameterDomainError(f"initial_color must lie in [0, {n}), got {initial_color}")
    if len(traj) == 0:
        raise TrajectoryFormatError("cannot lift an empty trajectory: no sample fixes the starting sheet")
    _check_off_axis(traj)
    limit = math.pi / n
    s = traj.states

    if traj.coords == CoordKind.polar:
        psi = s[:, 1]
        steps = np.diff(psi)
    else:
        psi = np.arctan2(s[:, 1], s[:, 0])
        steps = np.angle(np.exp(1j * np.diff(psi)))

    too_far = np.abs(steps) >= limit
    if np.any(too_far):
        idx = int(np.argmax(too_far)) + 1
        raise AmbiguousLiftError(
            f"angular step {abs(steps[idx - 1]):.3g} rad >= pi/{n}; resample the trajectory more densely",
            index=idx,
            time=float(traj.times[idx]),
        )

    theta0 = (float(psi[0]) % TWO_PI + TWO_PI * initial_color) / n
    if traj.coords == CoordKind.polar:
        theta = theta0 + (psi - psi[0]) / n
        states = np.column_stack([s[:, 0], theta, s[:, 2]])
    else:
        # Re-anchor on every sample's own angle so no rounding accumulates.
        theta = np.empty(len(psi))
        theta[0] = theta0
        for k in range(1, len(psi)):
            prev = theta[k - 1]
            delta = math.remainder(psi[k] - n * prev, TWO_PI)
            theta[k] = (prev + delta / n) % TWO_PI
        r = np.hypot(s[:, 0], s[:, 1])
        states = np.column_stack([r * np.cos(theta), r * np.sin(theta), s[:, 2]])

    meta = _retag_system(traj.meta, n, lifting=True)
    meta.pop("color_convention", None)
    meta.update({"lift_fold": n, "initial_color": initial_color})
    return Trajectory(times=traj.times, states=states, coords=traj.coords, meta=meta)


# ── Transfer across the class ─────────────────────────────────────────────────

def transfer_trajectory(
    traj: Trajectory,
    source_n: int,
    target_n: int,
    initial_color: int = 0,
) -> Trajectory:
    """
    Carry an L_source trajectory to L_target.

    When target_n divides source_n this is one covering of fold
    source_n/target_n; otherwise factor down to L1 and lift with fold target_n.
    """
    _require_fold(source_n)
    _require_fold(target_n)
    if source_n % target_n == 0:
        fold = source_n // target_n
        return traj if fold == 1 else factor_trajectory(traj, fold)
    quotient = factor_trajectory(traj, source_n) if source_n > 1 else traj
    return lift_trajectory(quotient, target_n, initial_color)
