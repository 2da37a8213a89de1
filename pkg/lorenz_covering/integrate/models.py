"""Integrator configuration and the sampled Trajectory container."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from lorenz_covering.dynamics.models import CartesianState, CoordKind, PolarState
from lorenz_covering.errors import TrajectoryFormatError


class IntegratorMode(str, Enum):
    fixed = "fixed"          # classical RK4 with a uniform step
    adaptive = "adaptive"    # embedded 5(4) pair with PI step control


class IntegratorConfig(BaseModel):
    """Settings shared by `integrate`, `flow` and the Lyapunov estimators."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    mode: IntegratorMode = IntegratorMode.adaptive
    step: float = Field(0.01, gt=0.0, description="Step size (fixed mode)")
    rel_tol: float = Field(1e-9, gt=0.0, description="Relative tolerance (adaptive mode)")
    abs_tol: float = Field(1e-12, gt=0.0, description="Absolute tolerance (adaptive mode)")
    max_step: float = Field(0.05, gt=0.0, description="Largest step the controller may take")
    min_step: float = Field(1e-12, gt=0.0, description="Step underflow guard")
    sample_interval: float = Field(0.01, gt=0.0, description="Output cadence")
    debug: bool = Field(False, description="Record every accepted step in meta['step_log']")

    @model_validator(mode="after")
    def check_steps(self) -> IntegratorConfig:
        if not self.min_step < self.max_step:
            raise ValueError(f"min_step ({self.min_step}) must be < max_step ({self.max_step})")
        if self.sample_interval < self.min_step:
            raise ValueError(
                f"sample_interval ({self.sample_interval}) must be >= min_step ({self.min_step})"
            )
        return self


@dataclass
class Trajectory:
    """
    Time-stamped state samples.

    `states` has shape (N, 3) and holds (x, y, z) when coords is cartesian or
    (radius, angle, z) with an unwrapped angle when coords is polar.
    `colors` (optional) holds the sheet index of each sample.
    """
    times:  np.ndarray
    states: np.ndarray
    coords: CoordKind = CoordKind.cartesian
    colors: np.ndarray | None = None
    meta:   dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.times = np.asarray(self.times, dtype=float)
        self.states = np.asarray(self.states, dtype=float)
        self.coords = CoordKind(self.coords)
        if self.times.ndim != 1:
            raise TrajectoryFormatError("times must be one-dimensional")
        if self.states.ndim != 2 or self.states.shape[1] != 3:
            raise TrajectoryFormatError(f"states must have shape (N, 3), got {self.states.shape}")
        if len(self.states) != len(self.times):
            raise TrajectoryFormatError(
                f"{len(self.times)} time stamps but {len(self.states)} states"
            )
        steps = np.diff(self.times)
        if np.any(~(steps > 0.0)):
            bad = int(np.argmax(~(steps > 0.0))) + 1
            raise TrajectoryFormatError("time stamps must be strictly increasing", row=bad)
        if self.coords == CoordKind.polar and np.any(self.states[:, 0] < 0.0):
            raise TrajectoryFormatError("polar trajectory has a negative radius")
        if self.colors is not None:
            self.colors = np.asarray(self.colors, dtype=np.int64)
            if self.colors.shape != self.times.shape:
                raise TrajectoryFormatError(
                    f"{len(self.times)} time stamps but {len(self.colors)} colors"
                )

    def __len__(self) -> int:
        return len(self.times)

    # ── Views ─────────────────────────────────────────────────────────────────

    def state_at(self, i: int) -> CartesianState | PolarState:
        row = self.states[i]
        if self.coords == CoordKind.polar:
            return PolarState.from_array(row)
        return CartesianState.from_array(row)

    def cartesian(self) -> Trajectory:
        """Cartesian view; the angle is only reduced implicitly through cos/sin."""
        if self.coords == CoordKind.cartesian:
            return self
        rho, ang, z = self.states.T
        xyz = np.column_stack([rho * np.cos(ang), rho * np.sin(ang), z])
        return replace(self, states=xyz, coords=CoordKind.cartesian, meta=dict(self.meta))

    def polar(self) -> Trajectory:
        """Polar view with the angle unwrapped along the samples."""
        if self.coords == CoordKind.polar:
            return self
        x, y, z = self.states.T
        ang = np.unwrap(np.arctan2(y, x))
        rpz = np.column_stack([np.hypot(x, y), ang, z])
        return replace(self, states=rpz, coords=CoordKind.polar, meta=dict(self.meta))

    def xyz(self) -> np.ndarray:
        return self.cartesian().states

    def slice_time(self, t_start: float) -> Trajectory:
        """Drop samples before t_start (transient removal)."""
        mask = self.times >= t_start
        return replace(
            self,
            times=self.times[mask],
            states=self.states[mask],
            colors=None if self.colors is None else self.colors[mask],
            meta=dict(self.meta),
        )
