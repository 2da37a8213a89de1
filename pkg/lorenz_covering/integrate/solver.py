"""
Time integration: classical RK4 (fixed step) and the Dormand-Prince 5(4)
embedded pair with PI step-size control (adaptive).

Output is sampled on a fixed cadence t0 + k*sample_interval (plus the end
point) by cubic Hermite interpolation between accepted steps, so sampled
trajectories are comparable across integrator settings.

Usage:
    from lorenz_covering.integrate import integrate, flow, simulate
    traj = simulate(SystemSpec.l2(), CartesianState(1.0, 0.1, 0.5), 0.0, 50.0)
"""

from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np

from lorenz_covering.dynamics.models import CartesianState, CoordKind, PolarState, SystemSpec
from lorenz_covering.errors import AxisDomainError, NumericalFailure, ParameterDomainError
from lorenz_covering.integrate.models import IntegratorConfig, IntegratorMode, Trajectory
from lorenz_covering.integrate.systems import (
    VectorField,
    as_vector_field,
    field_for,
    state_array,
)

log = logging.getLogger(__name__)

# ── Dormand-Prince 5(4) tableau ───────────────────────────────────────────────

_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
)
_B = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84)
# 5th-order minus embedded 4th-order weights (last entry multiplies the FSAL stage)
_E = (71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40)

# Step-size controller
SAFETY = 0.9
GROWTH_MAX = 5.0
SHRINK_MIN = 0.2
_ALPHA = 0.17        # 1/5 - 0.75 * _BETA
_BETA = 0.04


StepCallback = Callable[[float, np.ndarray, np.ndarray, float, np.ndarray, np.ndarray], None]


class Integrator:
    """
    Stateful stepper over one VectorField.

    `advance_to` moves (t, y) forward to a target time, invoking `on_step`
    with (t_old, y_old, f_old, t_new, y_new, f_new) after every accepted step.
    The step size carries over between calls; `reset` replaces the state
    (used by the Lyapunov renormalization).
    """

    def __init__(self, field: VectorField, cfg: IntegratorConfig, t0: float, y0: np.ndarray) -> None:
        self.field = field
        self.cfg = cfg
        self.t = float(t0)
        self.y = np.array(y0, dtype=float)
        self._check_state(self.t, self.y)
        self.f = self._eval(self.y)
        self.h: float | None = None
        self._err_prev = 1e-4
        self.n_accepted = 0
        self.n_rejected = 0
        self.step_log: list[tuple[float, float, float]] = []

        scale_mag = np.ones(len(self.y))
        scale_mag[list(field.periodic_indices)] = 0.0
        self._use_magnitude = scale_mag.astype(bool)

    # ── Public ────────────────────────────────────────────────────────────────

    def reset(self, y: np.ndarray) -> None:
        self.y = np.array(y, dtype=float)
        self._check_state(self.t, self.y)
        self.f = self._eval(self.y)

    def advance_to(self, t_target: float, on_step: StepCallback | None = None) -> np.ndarray:
        if t_target <= self.t:
            return self.y
        if self.cfg.mode == IntegratorMode.fixed:
            self._advance_fixed(t_target, on_step)
        else:
            self._advance_adaptive(t_target, on_step)
        return self.y

    # ── Fixed-step RK4 ────────────────────────────────────────────────────────

    def _advance_fixed(self, t_target: float, on_step: StepCallback | None) -> None:
        span = t_target - self.t
        n_steps = max(1, math.ceil(span / self.cfg.step - 1e-9))
        h = span / n_steps
        t_start = self.t
        for k in range(1, n_steps + 1):
            y0, f0 = self.y, self.f
            k2 = self._eval(y0 + 0.5 * h * f0)
            k3 = self._eval(y0 + 0.5 * h * k2)
            k4 = self._eval(y0 + h * k3)
            y_new = y0 + (h / 6.0) * (f0 + 2.0 * k2 + 2.0 * k3 + k4)
            t_new = t_target if k == n_steps else t_start + k * h
            if not np.all(np.isfinite(y_new)):
                raise NumericalFailure("non-finite state", time=t_new, state=y0)
            self._check_state(t_new, y_new)
            f_new = self._eval(y_new)
            if on_step is not None:
                on_step(self.t, y0, f0, t_new, y_new, f_new)
            self.t, self.y, self.f = t_new, y_new, f_new
            self.n_accepted += 1

    # ── Adaptive Dormand-Prince ───────────────────────────────────────────────

    def _dopri_step(self, h: float) -> tuple[np.ndarray, np.ndarray, float]:
        y, f = self.y, self.f
        ks = [f]
        for a_row in _A[1:]:
            incr = sum(a * k for a, k in zip(a_row, ks) if a != 0.0)
            ks.append(self._eval(y + h * incr))
        y_new = y + h * sum(b * k for b, k in zip(_B, ks) if b != 0.0)
        if not np.all(np.isfinite(y_new)):
            return y_new, ks[0], math.inf
        f_new = self._eval(y_new)
        ks.append(f_new)
        err_vec = h * sum(e * k for e, k in zip(_E, ks) if e != 0.0)
        mag = np.maximum(np.abs(y), np.abs(y_new))
        scale = self.cfg.abs_tol + self.cfg.rel_tol * np.where(self._use_magnitude, mag, 1.0)
        err = float(np.max(np.abs(err_vec) / scale))
        return y_new, f_new, err

    def _initial_step(self) -> float:
        cfg = self.cfg
        scale = cfg.abs_tol + cfg.rel_tol * np.where(self._use_magnitude, np.abs(self.y), 1.0)
        d0 = float(np.sqrt(np.mean((self.y / scale) ** 2)))
        d1 = float(np.sqrt(np.mean((self.f / scale) ** 2)))
        h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
        f1 = self._eval(self.y + h0 * self.f)
        d2 = float(np.sqrt(np.mean(((f1 - self.f) / scale) ** 2))) / h0
        if max(d1, d2) <= 1e-15:
            h1 = max(1e-6, h0 * 1e-3)
        else:
            h1 = (0.01 / max(d1, d2)) ** 0.2
        return min(100.0 * h0, h1, cfg.max_step)

    def _advance_adaptive(self, t_target: float, on_step: StepCallback | None) -> None:
        cfg = self.cfg
        if self.h is None:
            self.h = self._initial_step()
        while self.t < t_target:
            remaining = t_target - self.t
            clamped = self.h >= remaining
            h = remaining if clamped else self.h
            y_new, f_new, err = self._dopri_step(h)

            if err <= 1.0:
                t_new = t_target if clamped else self.t + h
                self._check_state(t_new, y_new)
                if cfg.debug:
                    self.step_log.append((t_new, h, err))
                    log.debug("accept t=%.9g h=%.3g err=%.3g", t_new, h, err)
                if on_step is not None:
                    on_step(self.t, self.y, self.f, t_new, y_new, f_new)
                self.t, self.y, self.f = t_new, y_new, f_new
                self.n_accepted += 1

                err_eff = max(err, 1e-10)
                factor = SAFETY * err_eff ** (-_ALPHA) * self._err_prev ** _BETA
                factor = min(GROWTH_MAX, max(SHRINK_MIN, factor))
                self._err_prev = max(err, 1e-4)
                if not clamped:
                    self.h = min(h * factor, cfg.max_step)
                elif factor < 1.0:
                    # A step shortened to hit t_target only informs a shrink.
                    self.h = min(self.h, h * factor)
            else:
                self.n_rejected += 1
                factor = SHRINK_MIN if not math.isfinite(err) else max(SHRINK_MIN, SAFETY * err ** -0.2)
                self.h = h * min(1.0, factor)
                if cfg.debug:
                    log.debug("reject t=%.9g h=%.3g err=%.3g", self.t, h, err)

            if self.h < cfg.min_step:
                raise NumericalFailure(
                    f"step underflow (required step {self.h:.3g} < min_step {cfg.min_step:.3g})",
                    time=self.t,
                    state=self.y,
                )

    # ── Guards ────────────────────────────────────────────────────────────────

    def _eval(self, y: np.ndarray) -> np.ndarray:
        return self.field.rhs(y)

    def _check_state(self, t: float, y: np.ndarray) -> None:
        if not np.all(np.isfinite(y)):
            raise NumericalFailure("non-finite state", time=t, state=y)
        for i in self.field.radius_indices:
            if y[i] < self.field.radius_min:
                raise AxisDomainError(
                    f"{self.field.label} trajectory reached the z-axis "
                    f"(radius {y[i]:.3g} < radius_min {self.field.radius_min:g})",
                    time=t,
                    state=y,
                )


# ── Sampling helpers ──────────────────────────────────────────────────────────

def sample_grid(t0: float, t1: float, interval: float) -> np.ndarray:
    """t0 + k*interval for every such time strictly before t1, then t1."""
    n = int(math.floor((t1 - t0) / interval))
    grid = t0 + interval * np.arange(n + 1)
    grid = grid[grid < t1 - 1e-12 * max(1.0, abs(t1))]
    return np.append(grid, t1)


def _hermite(t0, y0, f0, t1, y1, f1, ts: float) -> np.ndarray:
    h = t1 - t0
    s = (ts - t0) / h
    s2, s3 = s * s, s * s * s
    return (
        (2 * s3 - 3 * s2 + 1) * y0
        + (s3 - 2 * s2 + s) * h * f0
        + (-2 * s3 + 3 * s2) * y1
        + (s3 - s2) * h * f1
    )


# ── Operations ────────────────────────────────────────────────────────────────

def integrate(
    field: VectorField | SystemSpec | Callable,
    s0,
    t0: float,
    t1: float,
    cfg: IntegratorConfig | None = None,
    meta: dict | None = None,
) -> Trajectory:
    """
    Integrate `field` from s0 over [t0, t1] and return the sampled Trajectory.

    Raises:
        ParameterDomainError: t1 <= t0.
        AxisDomainError:      a polar quotient trajectory reaches radius_min.
        NumericalFailure:     step underflow or a non-finite state.
    """
    vf = as_vector_field(field)
    cfg = cfg or IntegratorConfig()
    if not t1 > t0:
        raise ParameterDomainError(f"integration needs t1 > t0 (got t0={t0}, t1={t1})")

    y0 = state_array(s0, vf.coords)
    grid = sample_grid(t0, t1, cfg.sample_interval)
    out = np.empty((len(grid), len(y0)))
    out[0] = y0
    cursor = [1]

    def on_step(ta, ya, fa, tb, yb, fb):
        j = cursor[0]
        while j < len(grid) and grid[j] <= tb:
            out[j] = yb if grid[j] == tb else _hermite(ta, ya, fa, tb, yb, fb, grid[j])
            j += 1
        cursor[0] = j

    stepper = Integrator(vf, cfg, t0, y0)
    stepper.advance_to(t1, on_step)

    log.info(
        "Integrated %s over [%g, %g]: %d samples, %d steps accepted, %d rejected",
        vf.label, t0, t1, len(grid), stepper.n_accepted, stepper.n_rejected,
    )
    info = {
        "integrator": cfg.model_dump(mode="json"),
        "field": vf.label,
        "steps_accepted": stepper.n_accepted,
        "steps_rejected": stepper.n_rejected,
        **(meta or {}),
    }
    if cfg.debug:
        info["step_log"] = stepper.step_log
    return Trajectory(times=grid, states=out, coords=vf.coords, meta=info)


def flow(
    field: VectorField | SystemSpec | Callable,
    s0,
    dt: float,
    cfg: IntegratorConfig | None = None,
):
    """Flow map: the state reached from s0 after time dt (same type as s0)."""
    vf = as_vector_field(field)
    cfg = cfg or IntegratorConfig()
    if dt == 0.0:
        return s0
    if dt < 0.0:
        raise ParameterDomainError(f"flow needs dt >= 0 (got {dt})")
    y = Integrator(vf, cfg, 0.0, state_array(s0, vf.coords)).advance_to(dt)
    if isinstance(s0, (CartesianState, PolarState)):
        return PolarState.from_array(y) if vf.coords == CoordKind.polar else CartesianState.from_array(y)
    return y


def simulate(
    spec: SystemSpec,
    s0,
    t0: float,
    t1: float,
    cfg: IntegratorConfig | None = None,
) -> Trajectory:
    """Integrate a class member in its canonical coordinates and tag the metadata."""
    return integrate(
        field_for(spec),
        s0,
        t0,
        t1,
        cfg,
        meta={"system": spec.model_dump(mode="json")},
    )
