"""Data models for the covering module: fold spec and colored (sheet-labelled) points."""

from __future__ import annotations

import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from lorenz_covering.dynamics.models import CartesianState
from lorenz_covering.errors import ParameterDomainError

# Recorded in trajectory metadata so colored renders are reproducible.
COLOR_CONVENTION = "color = floor(n*phi/(2*pi)), phi in [0, 2*pi), counterclockwise from +x"


class CoveringSpec(BaseModel):
    """The n-fold covering (radius, phi) -> (radius, n*phi), identity on z."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(2, ge=1, description="Fold count")


@dataclass(frozen=True)
class ColoredPoint:
    """
    A quotient-space point together with the sheet it came from.

    `base` is the image (x1, y1, z) under the n-fold covering and `color` the
    branch index in {0, ..., n-1}; together they determine the upstairs point.
    """
    base: CartesianState
    color: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterDomainError(f"fold count n must be >= 1, got n={self.n}")
        if not 0 <= self.color < self.n:
            raise ParameterDomainError(f"color must lie in [0, {self.n}), got {self.color}")

    @property
    def upstairs(self) -> CartesianState:
        """The preimage of `base` on sheet `color`."""
        r = self.base.radius
        phi_q = math.atan2(self.base.y, self.base.x) % (2.0 * math.pi)
        theta = (phi_q + 2.0 * math.pi * self.color) / self.n
        return CartesianState(r * math.cos(theta), r * math.sin(theta), self.base.z)
