"""
Change of variables between the standard Lorenz system and its normalized form L2.

For rayleigh > 1 (write R = rayleigh - 1):

    t = sqrt(R*sigma) * t_L
    x = X / sqrt(R*b)
    y = (Y - X) * sqrt(sigma/b) / R
    z = (Z - X^2/(2*sigma)) / R
    mu    = (1 + sigma) / sqrt(R*sigma)
    beta  = b / sqrt(R*sigma)
    gamma = 1 - b/(2*sigma)

All functions here are pure; the inverses exist on the stated domains and the
round trips are identities up to roundoff.
"""

from __future__ import annotations

import math

from lorenz_covering.dynamics.models import (
    CartesianState,
    NormalizedParams,
    PolarState,
    StandardParams,
    require_rayleigh,
)
from lorenz_covering.errors import ParameterDomainError


# ── Parameters ────────────────────────────────────────────────────────────────

def params_normalize(p: StandardParams) -> NormalizedParams:
    """(sigma, rayleigh, b) -> (mu, beta, gamma)."""
    require_rayleigh(p)
    scale = math.sqrt((p.rayleigh - 1.0) * p.sigma)
    return NormalizedParams(
        mu=(1.0 + p.sigma) / scale,
        beta=p.b / scale,
        gamma=1.0 - p.b / (2.0 * p.sigma),
    )


def params_denormalize(p: NormalizedParams) -> StandardParams:
    """
    (mu, beta, gamma) -> (sigma, rayleigh, b).

    sigma = beta / (2*mu*(1-gamma) - beta), b = 2*sigma*(1-gamma),
    rayleigh = 1 + (1+sigma)^2 / (mu^2 * sigma).
    """
    if not 0.0 < p.gamma < 1.0:
        raise ParameterDomainError(
            f"no standard-form preimage: gamma must lie in (0, 1), got gamma={p.gamma}"
        )
    denom = 2.0 * p.mu * (1.0 - p.gamma) - p.beta
    if not denom > 0.0:
        raise ParameterDomainError(
            "no standard-form preimage: requires 2*mu*(1-gamma) > beta "
            f"(got 2*mu*(1-gamma)={2.0 * p.mu * (1.0 - p.gamma):.6g}, beta={p.beta:.6g})"
        )
    sigma = p.beta / denom
    b = 2.0 * sigma * (1.0 - p.gamma)
    rayleigh = 1.0 + (1.0 + sigma) ** 2 / (p.mu ** 2 * sigma)
    return StandardParams(sigma=sigma, rayleigh=rayleigh, b=b)


# ── Time ──────────────────────────────────────────────────────────────────────

def time_scale(p: StandardParams) -> float:
    """sqrt((rayleigh-1)*sigma): normalized time units per standard time unit."""
    require_rayleigh(p)
    return math.sqrt((p.rayleigh - 1.0) * p.sigma)


def time_normalize(t_L: float, p: StandardParams) -> float:
    return time_scale(p) * t_L


def time_denormalize(t: float, p: StandardParams) -> float:
    return t / time_scale(p)


# ── States ────────────────────────────────────────────────────────────────────

def state_normalize(
    S: CartesianState,
    t_L: float,
    p: StandardParams,
) -> tuple[CartesianState, float]:
    """Standard-form state and time -> L2 state and time."""
    require_rayleigh(p)
    R = p.rayleigh - 1.0
    x = S.x / math.sqrt(R * p.b)
    y = (S.y - S.x) * math.sqrt(p.sigma / p.b) / R
    z = (S.z - S.x * S.x / (2.0 * p.sigma)) / R
    return CartesianState(x, y, z), time_normalize(t_L, p)


def state_denormalize(
    s: CartesianState,
    t: float,
    p: StandardParams,
) -> tuple[CartesianState, float]:
    """L2 state and time -> standard-form state and time."""
    require_rayleigh(p)
    R = p.rayleigh - 1.0
    X = math.sqrt(R * p.b) * s.x
    Y = X + R * math.sqrt(p.b / p.sigma) * s.y
    Z = R * s.z + X * X / (2.0 * p.sigma)
    return CartesianState(X, Y, Z), time_denormalize(t, p)


# ── Coordinates ───────────────────────────────────────────────────────────────

def to_polar(s: CartesianState) -> PolarState:
    """Cartesian -> polar with angle in (-pi, pi]."""
    return PolarState(math.hypot(s.x, s.y), math.atan2(s.y, s.x), s.z)


def to_cartesian(s: PolarState) -> CartesianState:
    return CartesianState(s.radius * math.cos(s.angle), s.radius * math.sin(s.angle), s.z)


def rotate(s: CartesianState, angle: float) -> CartesianState:
    """Rotate about the z-axis by `angle` (counterclockwise)."""
    c, sn = math.cos(angle), math.sin(angle)
    return CartesianState(c * s.x - sn * s.y, sn * s.x + c * s.y, s.z)
