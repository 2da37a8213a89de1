"""Closed-form equilibria of every member of the class."""

from __future__ import annotations

import math

from lorenz_covering.dynamics.models import (
    CartesianState,
    CoordKind,
    FixedPoint,
    PolarState,
    SystemFamily,
    SystemSpec,
)


def fixed_points(spec: SystemSpec) -> list[FixedPoint]:
    """
    Equilibria of `spec`.

    Standard: origin and C+- = (+-sqrt(b(r-1)), +-sqrt(b(r-1)), r-1) (C+- only for r > 1).
    L2:       (0,0,0) and (+-1, 0, gamma).
    L1 / Ln:  (rho=1, phi=2*pi*k/n, z=gamma) for k = 0..n-1, plus the axis point
              (0, 0, 0) flagged degenerate since the quotient is singular there.
    """
    p = spec.params

    if spec.family == SystemFamily.standard:
        points = [FixedPoint(CartesianState(0.0, 0.0, 0.0), CoordKind.cartesian)]
        if p.rayleigh > 1.0:
            c = math.sqrt(p.b * (p.rayleigh - 1.0))
            points.append(FixedPoint(CartesianState(c, c, p.rayleigh - 1.0), CoordKind.cartesian))
            points.append(FixedPoint(CartesianState(-c, -c, p.rayleigh - 1.0), CoordKind.cartesian))
        return points

    if spec.family == SystemFamily.l2:
        return [
            FixedPoint(CartesianState(0.0, 0.0, 0.0), CoordKind.cartesian),
            FixedPoint(CartesianState(1.0, 0.0, p.gamma), CoordKind.cartesian),
            FixedPoint(CartesianState(-1.0, 0.0, p.gamma), CoordKind.cartesian),
        ]

    n = spec.fold
    points = [
        FixedPoint(PolarState(1.0, 2.0 * math.pi * k / n, p.gamma), CoordKind.polar)
        for k in range(n)
    ]
    points.append(FixedPoint(
        PolarState(0.0, 0.0, 0.0),
        CoordKind.polar,
        degenerate=True,
        note="z-axis point: image of the origin, where the covering is singular",
    ))
    return points
