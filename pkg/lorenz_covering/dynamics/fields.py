"""
Vector fields of the Lorenz-type class.

Each family has an array kernel (`*_rhs`) that accepts a shape-(3,) state or a
shape-(3, N) batch and returns the derivative of the same shape, plus a typed
wrapper operating on CartesianState / PolarState.

Quotient field L1 in polar coordinates (rho, psi, z), with C = cos(psi),
S = sin(psi) and w = rho^2 (1 + C) / 2 (the pulled-back x^2):

    d rho/dt = rho * [ (S/2) * (2 - (1 - gamma) w - z) - mu (1 - C)/2 ]
    d psi/dt = -(1 + C) * ((1 - gamma) w - 1 + z) - mu S - (1 - C)
    d z/dt   = beta * (gamma w - z)

Ln is the pullback through (r, phi) -> (r, n phi): evaluate L1 at
(rho, n*phi, z) and divide the angular rate by n.
"""

from __future__ import annotations

import numpy as np

from lorenz_covering.dynamics.models import (
    RADIUS_MIN,
    CartesianState,
    NormalizedParams,
    PolarDerivative,
    PolarState,
    StandardParams,
)
from lorenz_covering.errors import AxisDomainError, ParameterDomainError


# ── Array kernels ─────────────────────────────────────────────────────────────

def standard_rhs(u: np.ndarray, sigma: float, rayleigh: float, b: float) -> np.ndarray:
    X, Y, Z = u[0], u[1], u[2]
    return np.array([
        sigma * (Y - X),
        (rayleigh - Z) * X - Y,
        -b * Z + X * Y,
    ])


def l2_rhs(u: np.ndarray, mu: float, beta: float, gamma: float) -> np.ndarray:
    x, y, z = u[0], u[1], u[2]
    x2 = x * x
    return np.array([
        y,
        (1.0 - z - (1.0 - gamma) * x2) * x - mu * y,
        beta * (gamma * x2 - z),
    ])


def l1_polar_rhs(u: np.ndarray, mu: float, beta: float, gamma: float) -> np.ndarray:
    rho, psi, z = u[0], u[1], u[2]
    C = np.cos(psi)
    S = np.sin(psi)
    w = rho * rho * (1.0 + C) / 2.0
    return np.array([
        rho * ((S / 2.0) * (2.0 - (1.0 - gamma) * w - z) - mu * (1.0 - C) / 2.0),
        -(1.0 + C) * ((1.0 - gamma) * w - 1.0 + z) - mu * S - (1.0 - C),
        beta * (gamma * w - z),
    ])


def ln_polar_rhs(u: np.ndarray, mu: float, beta: float, gamma: float, n: int) -> np.ndarray:
    rho, phi, z = u[0], u[1], u[2]
    F = l1_polar_rhs(np.array([rho, n * phi, z]), mu, beta, gamma)
    F[1] = F[1] / n
    return F


def ln_cartesian_rhs(u: np.ndarray, mu: float, beta: float, gamma: float, n: int) -> np.ndarray:
    """Chain-rule Cartesian form of Ln; caller guarantees radius >= RADIUS_MIN."""
    x, y, z = u[0], u[1], u[2]
    rho = np.hypot(x, y)
    phi = np.arctan2(y, x)
    d_rho, d_phi, d_z = ln_polar_rhs(np.array([rho, phi, z]), mu, beta, gamma, n)
    return np.array([
        d_rho * x / rho - y * d_phi,
        d_rho * y / rho + x * d_phi,
        d_z,
    ])


# ── Typed operations ──────────────────────────────────────────────────────────

def vf_standard(s: CartesianState, p: StandardParams) -> CartesianState:
    """Standard Lorenz field (sigma(Y-X), (r-Z)X - Y, -bZ + XY)."""
    return CartesianState.from_array(standard_rhs(s.as_array(), p.sigma, p.rayleigh, p.b))


def vf_L2(s: CartesianState, p: NormalizedParams) -> CartesianState:
    return CartesianState.from_array(l2_rhs(s.as_array(), p.mu, p.beta, p.gamma))


def vf_L1_polar(s: PolarState, p: NormalizedParams) -> PolarDerivative:
    if not s.radius > 0.0:
        raise AxisDomainError("quotient field undefined on the z-axis (radius <= 0)", state=s.as_array())
    return PolarDerivative.from_array(l1_polar_rhs(s.as_array(), p.mu, p.beta, p.gamma))


def vf_Ln_polar(s: PolarState, p: NormalizedParams, n: int) -> PolarDerivative:
    _require_fold(n)
    if not s.radius > 0.0:
        raise AxisDomainError("quotient field undefined on the z-axis (radius <= 0)", state=s.as_array())
    return PolarDerivative.from_array(ln_polar_rhs(s.as_array(), p.mu, p.beta, p.gamma, n))


def vf_Ln_cartesian(
    s: CartesianState,
    p: NormalizedParams,
    n: int,
    radius_min: float = RADIUS_MIN,
) -> CartesianState:
    _require_fold(n)
    if s.radius < radius_min:
        raise AxisDomainError(
            f"Cartesian L{n} field is singular within radius {radius_min:g} of the z-axis",
            state=s.as_array(),
        )
    return CartesianState.from_array(ln_cartesian_rhs(s.as_array(), p.mu, p.beta, p.gamma, n))


def _require_fold(n: int) -> None:
    if n < 1:
        raise ParameterDomainError(f"fold count n must be >= 1, got n={n}")
