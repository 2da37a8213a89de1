"""
Point-level covering operations.

The n-fold covering acts as (radius, phi, z) -> (radius, n*phi, z). In
Cartesian form it is w = r * (u / r)^n with u = x + iy, which for n = 2 is
exactly x1 = (x^2 - y^2)/r, y1 = 2xy/r.
"""

from __future__ import annotations

import math

import numpy as np

from lorenz_covering.covering.models import ColoredPoint
from lorenz_covering.dynamics.models import CartesianState
from lorenz_covering.dynamics.transforms import rotate
from lorenz_covering.errors import AxisDomainError, ParameterDomainError

TWO_PI = 2.0 * math.pi


def _require_fold(n: int) -> None:
    if n < 1:
        raise ParameterDomainError(f"fold count n must be >= 1, got n={n}")


def _require_off_axis(s: CartesianState) -> float:
    r = s.radius
    if not r > 0.0:
        raise AxisDomainError("covering is undefined on the z-axis (radius 0)", state=s.as_array())
    return r


# ── Array kernels ─────────────────────────────────────────────────────────────

def cover_xy(x: np.ndarray, y: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized covering of planar coordinates (radius must be > 0)."""
    if n == 1:
        return np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    r = np.hypot(x, y)
    u = (np.asarray(x) + 1j * np.asarray(y)) / r
    w = r * u ** n
    return w.real, w.imag


def color_array(x: np.ndarray, y: np.ndarray, n: int) -> np.ndarray:
    """Sheet index floor(n*phi/(2*pi)) with phi reduced to [0, 2*pi)."""
    phi = np.mod(np.arctan2(y, x), TWO_PI)
    colors = np.floor(n * phi / TWO_PI).astype(np.int64)
    return np.clip(colors, 0, n - 1)


# ── Typed operations ──────────────────────────────────────────────────────────

def cover_point(s: CartesianState, n: int) -> CartesianState:
    """Image of s under the n-fold covering; radius and z preserved."""
    _require_fold(n)
    r = _require_off_axis(s)
    if n == 1:
        return s
    w = r * (complex(s.x, s.y) / r) ** n
    return CartesianState(w.real, w.imag, s.z)


def color_of(s: CartesianState, n: int) -> int:
    _require_fold(n)
    _require_off_axis(s)
    phi = math.atan2(s.y, s.x) % TWO_PI
    return min(int(math.floor(n * phi / TWO_PI)), n - 1)


def colored(s: CartesianState, n: int) -> ColoredPoint:
    """Upstairs point -> (covering image, sheet index)."""
    return ColoredPoint(base=cover_point(s, n), color=color_of(s, n), n=n)


def branch_preimages(q: CartesianState, n: int) -> list[ColoredPoint]:
    """
    The n preimages of q, at angles (phi_q + 2*pi*k)/n with phi_q in [0, 2*pi),
    each tagged with color k. Read the upstairs points from `.upstairs`.
    """
    _require_fold(n)
    _require_off_axis(q)
    return [ColoredPoint(base=q, color=k, n=n) for k in range(n)]


def deck_transform(s: CartesianState, n: int, k: int = 1) -> CartesianState:
    """Rotation by 2*pi*k/n; leaves the covering image unchanged."""
    _require_fold(n)
    return rotate(s, TWO_PI * k / n)
