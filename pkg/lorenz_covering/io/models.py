"""Scenario documents and rendering options."""

from __future__ import annotations

from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from lorenz_covering.covering.models import CoveringSpec
from lorenz_covering.dynamics.models import StandardParams, SystemFamily, SystemSpec
from lorenz_covering.integrate.models import IntegratorConfig

SCHEMA_VERSION = 1

# Axes a projection may name; radius and angle come from the polar view.
AXES = ("x", "y", "z", "radius", "angle")


# ── Enumerations ──────────────────────────────────────────────────────────────

class OutputKind(str, Enum):
    csv = "csv"
    svg = "svg"


class ColorBy(str, Enum):
    color = "color"    # stroke per sheet when a color channel exists
    none = "none"      # single stroke colour


def parse_projection(value: str) -> tuple[str, str]:
    """'x,z' -> ('x', 'z'); raises ValueError for anything else."""
    parts = tuple(p.strip().lower() for p in value.split(","))
    if len(parts) != 2 or parts[0] == parts[1] or not all(p in AXES for p in parts):
        raise ValueError(f"projection must name two different axes of {', '.join(AXES)}, got {value!r}")
    return parts  # type: ignore[return-value]


# ── Scenario ──────────────────────────────────────────────────────────────────

class TimeSpan(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    t0: float = Field(0.0, description="Start time")
    t1: float = Field(..., description="End time (> t0)")

    @model_validator(mode="after")
    def check_order(self) -> TimeSpan:
        if not self.t1 > self.t0:
            raise ValueError(f"t1 must be > t0 (got t0={self.t0}, t1={self.t1})")
        return self


class OutputSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: OutputKind
    path: str = Field(..., min_length=1, description="Output file path")
    projection: str = Field("x,y", description="Two axes for svg output, e.g. 'x,z'")
    color_by: ColorBy = Field(ColorBy.color, description="Per-sheet colouring for svg output")

    @field_validator("projection")
    @classmethod
    def check_projection(cls, v: str) -> str:
        return ",".join(parse_projection(v))


class Scenario(BaseModel):
    """
    One simulation run and the files it produces.

    With `normalize` the standard system is integrated as L2 after the
    change of variables (rayleigh must exceed 1). With `cover` the result is
    passed through the n-fold covering before it is written.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    schema_version: Literal[1] = Field(SCHEMA_VERSION, description="Scenario format version")
    system: SystemSpec = Field(default_factory=SystemSpec.l2)
    initial_state: tuple[float, float, float] = Field(
        (1.0, 0.1, 0.5), description="Cartesian (x, y, z) start point"
    )
    time: TimeSpan
    integrator: IntegratorConfig = Field(default_factory=IntegratorConfig)
    normalize: bool = Field(False, description="Integrate the standard system in normalized form")
    cover: CoveringSpec | None = Field(None, description="Covering applied to the result; a bare integer is its fold")
    outputs: list[OutputSpec] = Field(..., min_length=1)

    @field_validator("cover", mode="before")
    @classmethod
    def fold_shorthand(cls, v: object) -> object:
        if isinstance(v, int) and not isinstance(v, bool):
            return {"n": v}
        return v

    @model_validator(mode="after")
    def check_normalize(self) -> Scenario:
        if self.normalize:
            if self.system.family != SystemFamily.standard:
                raise ValueError("normalize applies to the standard system only")
            params = self.system.params
            assert isinstance(params, StandardParams)
            if not params.rayleigh > 1.0:
                raise ValueError(
                    f"normalize requires rayleigh > 1 (r > 1), got rayleigh={params.rayleigh}"
                )
        return self


# ── Rendering ─────────────────────────────────────────────────────────────────

class RenderOptions(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    width_in:   float = Field(6.0, gt=0.0, description="Figure width (inches)")
    height_in:  float = Field(6.0, gt=0.0, description="Figure height (inches)")
    line_width: float = Field(0.4, gt=0.0)
    color_by:   ColorBy = ColorBy.color
    title:      str | None = None
    caption:    bool = Field(True, description="Add a metadata caption under the axes")
