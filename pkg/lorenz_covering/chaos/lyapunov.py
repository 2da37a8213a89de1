"""
Largest Lyapunov exponent by two-trajectory renormalization.

A principal and a companion trajectory (initial separation delta0 in a
seeded random direction) are integrated as one joint system so both share
every step. Every tau the separation d is measured, log(d/delta0) is
accumulated and the companion is pulled back to distance delta0 along the
current separation. Separations are measured in the Cartesian chart, so
polar quotient fields are compared with the same metric as L2.

divergence_slope is an independent check: the least-squares slope of the
log-separation of unrenormalized pairs, averaged over several starts.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.stats import linregress

from lorenz_covering.chaos.models import LyapunovConfig, LyapunovEstimate
from lorenz_covering.dynamics.models import CoordKind, SystemSpec
from lorenz_covering.errors import AxisDomainError, NumericalFailure
from lorenz_covering.integrate.solver import Integrator
from lorenz_covering.integrate.systems import VectorField, as_vector_field, paired, state_array

log = logging.getLogger(__name__)

# Divergence-slope oracle
SATURATION = 1e-3
FIT_SKIP_FRACTION = 0.2


# ── Chart helpers ─────────────────────────────────────────────────────────────

def _chart(y: np.ndarray, coords: CoordKind) -> np.ndarray:
    if coords == CoordKind.polar:
        rho, ang, z = y[:3]
        return np.array([rho * math.cos(ang), rho * math.sin(ang), z])
    return np.asarray(y, dtype=float)


def _separation(u: np.ndarray, vf: VectorField) -> float:
    d = vf.dim
    if vf.coords == CoordKind.polar:
        return float(np.linalg.norm(_chart(u[d:], vf.coords) - _chart(u[:d], vf.coords)))
    return float(np.linalg.norm(u[d:] - u[:d]))


def _companion(y: np.ndarray, direction: np.ndarray, delta0: float, vf: VectorField) -> np.ndarray:
    """A state at Cartesian distance delta0 from y along `direction`."""
    if vf.coords != CoordKind.polar:
        return y + delta0 * direction
    c = _chart(y, vf.coords) + delta0 * direction
    ang = math.atan2(c[1], c[0])
    ang = y[1] + math.remainder(ang - y[1], 2.0 * math.pi)
    return np.array([math.hypot(c[0], c[1]), ang, c[2]])


def _renormalize(u: np.ndarray, d: float, delta0: float, dim: int) -> np.ndarray:
    principal, companion = u[:dim], u[dim:]
    return np.concatenate([principal, principal + (companion - principal) * (delta0 / d)])


def _direction(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def _settle(vf: VectorField, y0: np.ndarray, cfg: LyapunovConfig) -> np.ndarray:
    if cfg.transient <= 0.0:
        return y0
    stepper = Integrator(vf, cfg.integrator, 0.0, y0)
    try:
        return stepper.advance_to(cfg.transient).copy()
    except (NumericalFailure, AxisDomainError) as exc:
        raise NumericalFailure(
            f"Lyapunov transient failed before any renormalization: {exc}",
            time=stepper.t,
            state=stepper.y,
            partial=np.empty((0, 2)),
        ) from exc


# ── Operations ────────────────────────────────────────────────────────────────

def lyapunov_max(
    spec: SystemSpec | VectorField,
    s0,
    cfg: LyapunovConfig | None = None,
) -> LyapunovEstimate:
    """
    Benettin estimate of the largest Lyapunov exponent of `spec` from s0.

    Time units are those of the field (normalized time for L1, L2 and Ln).

    Raises:
        AxisDomainError:  s0 lies outside the field's domain.
        NumericalFailure: the run broke down; `partial` holds the convergence
                          rows recorded so far, shape (k, 2), empty when the
                          transient itself failed.
    """
    cfg = cfg or LyapunovConfig()
    vf = as_vector_field(spec)
    pair_vf = paired(vf)
    rng = np.random.default_rng(cfg.seed)
    dim = vf.dim

    y = _settle(vf, state_array(s0, vf.coords), cfg)
    u0 = np.concatenate([y, _companion(y, _direction(rng, dim), cfg.delta0, vf)])
    stepper = Integrator(pair_vf, cfg.integrator, 0.0, u0)

    n_int = cfg.intervals
    growth = np.empty(n_int)
    convergence = np.empty((n_int, 2))
    total = 0.0
    for i in range(n_int):
        t = (i + 1) * cfg.tau
        try:
            u = stepper.advance_to(t)
        except (NumericalFailure, AxisDomainError) as exc:
            raise NumericalFailure(
                f"Lyapunov run failed after {i} renormalizations: {exc}",
                time=stepper.t,
                state=stepper.y[:dim],
                partial=convergence[:i].copy(),
            ) from exc
        d = _separation(u, vf)
        if not d > 0.0:
            raise NumericalFailure(
                "companion trajectory collapsed onto the principal one",
                time=t,
                state=u[:dim],
                partial=convergence[:i].copy(),
            )
        growth[i] = math.log(d / cfg.delta0)
        total += growth[i]
        convergence[i] = (t, total / t)
        stepper.reset(_renormalize(u, d, cfg.delta0, dim))

    estimate = LyapunovEstimate(
        lambda1=float(convergence[-1, 1]),
        convergence=convergence,
        log_growth=growth,
        settings={
            "field": vf.label,
            "t_total": cfg.t_total,
            "tau": cfg.tau,
            "delta0": cfg.delta0,
            "transient": cfg.transient,
            "seed": cfg.seed,
        },
        seed=cfg.seed,
    )
    log.info(
        "Lyapunov %s: lambda1=%.5f +/- %.5f (%d renormalizations, seed %d)",
        vf.label, estimate.lambda1, estimate.stderr(cfg.n_blocks), n_int, cfg.seed,
    )
    return estimate


def divergence_slope(
    spec: SystemSpec | VectorField,
    s0,
    cfg: LyapunovConfig | None = None,
    n_starts: int = 10,
    horizon: float | None = None,
) -> float:
    """
    Mean slope of log-separation against time for unrenormalized pairs.

    Starts are spaced 20*tau apart along the settled trajectory. Each pair is
    followed until the separation reaches SATURATION or `horizon` (default
    t_total/4) passes; the first FIT_SKIP_FRACTION of the record is dropped
    while the separation aligns with the unstable direction.
    """
    cfg = cfg or LyapunovConfig()
    vf = as_vector_field(spec)
    pair_vf = paired(vf)
    rng = np.random.default_rng(cfg.seed)
    horizon = horizon if horizon is not None else cfg.t_total / 4.0

    walker = Integrator(vf, cfg.integrator, 0.0, _settle(vf, state_array(s0, vf.coords), cfg))
    slopes: list[float] = []
    for k in range(n_starts):
        y = walker.advance_to(walker.t + 20.0 * cfg.tau).copy()
        u0 = np.concatenate([y, _companion(y, _direction(rng, vf.dim), cfg.delta0, vf)])
        pair = Integrator(pair_vf, cfg.integrator, 0.0, u0)
        times, logs = [0.0], [math.log(cfg.delta0)]
        t = 0.0
        while t < horizon:
            t += cfg.tau
            d = _separation(pair.advance_to(t), vf)
            if d >= SATURATION:
                break
            times.append(t)
            logs.append(math.log(d))
        ts = np.asarray(times)
        keep = ts >= FIT_SKIP_FRACTION * ts[-1]
        if keep.sum() < 3:
            log.debug("divergence start %d saturated too early; skipped", k)
            continue
        slopes.append(float(linregress(ts[keep], np.asarray(logs)[keep]).slope))

    if not slopes:
        raise NumericalFailure("no divergence window long enough to fit a slope")
    slope = float(np.mean(slopes))
    log.info("Divergence slope %s: %.5f over %d starts", vf.label, slope, len(slopes))
    return slope
