"""Data models for the dynamics module: parameters, phase-space states, system specs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from lorenz_covering.errors import ParameterDomainError

# Below this radius the covering map and the polar quotient fields are treated
# as undefined (integration of L1/Ln stops with a numerical failure).
RADIUS_MIN = 1e-9


# ── Enumerations ──────────────────────────────────────────────────────────────

class SystemFamily(str, Enum):
    standard = "standard"
    l2 = "l2"
    l1 = "l1"
    ln = "ln"


class CoordKind(str, Enum):
    cartesian = "cartesian"
    polar = "polar"


# ── Parameter triples ─────────────────────────────────────────────────────────

class StandardParams(BaseModel):
    """(sigma, rayleigh, b) of the standard Lorenz system."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    sigma: float = Field(10.0, gt=0.0, description="Prandtl number sigma")
    rayleigh: float = Field(28.0, description="Reduced Rayleigh number (the 'r' of the standard form)")
    b: float = Field(8.0 / 3.0, gt=0.0, description="Geometric factor b")

    @classmethod
    def canonical(cls) -> StandardParams:
        return cls()


class NormalizedParams(BaseModel):
    """(mu, beta, gamma) of the normalized system L2 and its relatives."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    mu: float = Field(..., gt=0.0, description="Damping of the y-equation")
    beta: float = Field(..., gt=0.0, description="Relaxation rate of z")
    gamma: float = Field(..., description="Coupling of x^2 into z")

    @classmethod
    def canonical(cls) -> NormalizedParams:
        from lorenz_covering.dynamics.transforms import params_normalize
        return params_normalize(StandardParams.canonical())

    @property
    def invertible(self) -> bool:
        return 0.0 < self.gamma < 1.0 and 2.0 * self.mu * (1.0 - self.gamma) > self.beta


# ── Phase-space states ────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class CartesianState:
    """(x, y, z) point; also houses (X, Y, Z) of the standard system."""
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise ParameterDomainError(f"state components must be finite, got {(self.x, self.y, self.z)}")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @classmethod
    def from_array(cls, u) -> Self:
        return cls(float(u[0]), float(u[1]), float(u[2]))

    @property
    def radius(self) -> float:
        return math.hypot(self.x, self.y)


@dataclass(frozen=True, slots=True)
class PolarState:
    """(radius, angle, z) point; the angle is kept unwrapped."""
    radius: float
    angle: float
    z: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and math.isfinite(self.angle) and math.isfinite(self.z)):
            raise ParameterDomainError(
                f"state components must be finite, got {(self.radius, self.angle, self.z)}"
            )
        if self.radius < 0.0:
            raise ParameterDomainError(f"radius must be >= 0, got {self.radius}")

    def as_array(self) -> np.ndarray:
        return np.array([self.radius, self.angle, self.z], dtype=float)

    @classmethod
    def from_array(cls, u) -> Self:
        return cls(float(u[0]), float(u[1]), float(u[2]))

    def reduced(self) -> PolarState:
        """Same point with the angle reduced to [0, 2*pi)."""
        return PolarState(self.radius, self.angle % (2.0 * math.pi), self.z)


@dataclass(frozen=True, slots=True)
class PolarDerivative:
    """Time-derivative of a PolarState; d(radius)/dt may be negative."""
    radius: float
    angle: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.radius, self.angle, self.z], dtype=float)

    @classmethod
    def from_array(cls, u) -> Self:
        return cls(float(u[0]), float(u[1]), float(u[2]))


State = CartesianState | PolarState


# ── System specification ──────────────────────────────────────────────────────

class SystemSpec(BaseModel):
    """One member of the Lorenz-type class (or the standard system itself)."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    family: SystemFamily
    n: int | None = Field(None, description="Fold count (Ln only; L2 is n=2, L1 is n=1)")
    params: StandardParams | NormalizedParams | None = None

    @model_validator(mode="before")
    @classmethod
    def fill_default_params(cls, data):
        if isinstance(data, dict) and data.get("params") is None and "family" in data:
            family = SystemFamily(data["family"])
            data = dict(data)
            data["params"] = (
                StandardParams.canonical()
                if family == SystemFamily.standard
                else NormalizedParams.canonical()
            )
        return data

    @model_validator(mode="after")
    def check_consistency(self) -> SystemSpec:
        if self.family == SystemFamily.ln:
            if self.n is None:
                raise ValueError("family 'ln' requires n")
            if self.n < 1:
                raise ValueError(f"n must be >= 1 (got {self.n})")
        elif self.family == SystemFamily.l2 and self.n not in (None, 2):
            raise ValueError(f"family 'l2' has n=2 (got {self.n})")
        elif self.family == SystemFamily.l1 and self.n not in (None, 1):
            raise ValueError(f"family 'l1' has n=1 (got {self.n})")
        elif self.family == SystemFamily.standard and self.n is not None:
            raise ValueError("family 'standard' takes no n")

        if self.family == SystemFamily.standard and not isinstance(self.params, StandardParams):
            raise ValueError("family 'standard' requires (sigma, rayleigh, b) parameters")
        elif self.family != SystemFamily.standard and not isinstance(self.params, NormalizedParams):
            raise ValueError(f"family '{self.family.value}' requires (mu, beta, gamma) parameters")
        return self

    # Constructors used throughout the package and the tests.
    @classmethod
    def standard(cls, params: StandardParams | None = None) -> SystemSpec:
        return cls(family=SystemFamily.standard, params=params)

    @classmethod
    def l2(cls, params: NormalizedParams | None = None) -> SystemSpec:
        return cls(family=SystemFamily.l2, params=params)

    @classmethod
    def l1(cls, params: NormalizedParams | None = None) -> SystemSpec:
        return cls(family=SystemFamily.l1, params=params)

    @classmethod
    def ln(cls, n: int, params: NormalizedParams | None = None) -> SystemSpec:
        return cls(family=SystemFamily.ln, n=n, params=params)

    @property
    def fold(self) -> int | None:
        """Effective n of the class member; None for the standard system."""
        return {
            SystemFamily.standard: None,
            SystemFamily.l2: 2,
            SystemFamily.l1: 1,
        }.get(self.family, self.n)

    @property
    def coords(self) -> CoordKind:
        """Canonical integration coordinates of this system."""
        if self.family in (SystemFamily.standard, SystemFamily.l2):
            return CoordKind.cartesian
        return CoordKind.polar

    @property
    def label(self) -> str:
        if self.family == SystemFamily.standard:
            return "standard"
        return f"L{self.fold}"


@dataclass(frozen=True)
class FixedPoint:
    """An equilibrium, or the flagged axis point of a quotient system."""
    state: CartesianState | PolarState
    coords: CoordKind
    degenerate: bool = False      # True for the z-axis point where the quotient is singular
    note: str = ""


def require_rayleigh(p: StandardParams) -> None:
    if not p.rayleigh > 1.0:
        raise ParameterDomainError(
            f"normalization requires rayleigh > 1 (r > 1), got rayleigh={p.rayleigh}"
        )
