"""Configuration and result types for Lyapunov estimation and the chaos table."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from lorenz_covering.integrate.models import IntegratorConfig

# Minimum number of blocks the convergence record is split into for stderr.
MIN_BLOCKS = 10


def _lyapunov_integrator() -> IntegratorConfig:
    return IntegratorConfig(rel_tol=1e-9, abs_tol=1e-12, max_step=0.05)


class LyapunovConfig(BaseModel):
    """Settings of one two-trajectory renormalization run."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    t_total:    float = Field(2000.0, ge=100.0, description="Accumulation time after the transient")
    tau:        float = Field(0.5, gt=0.0, description="Renormalization interval")
    delta0:     float = Field(1e-8, gt=0.0, lt=1e-2, description="Separation restored at every renormalization")
    transient:  float = Field(50.0, ge=0.0, description="Time integrated and discarded before accumulation")
    seed:       int   = Field(0, ge=0, description="Seed of the perturbation direction")
    n_blocks:   int   = Field(MIN_BLOCKS, ge=MIN_BLOCKS, description="Blocks used for the standard error")
    integrator: IntegratorConfig = Field(default_factory=_lyapunov_integrator)

    @model_validator(mode="after")
    def check_intervals(self) -> LyapunovConfig:
        intervals = round(self.t_total / self.tau)
        if intervals < self.n_blocks:
            raise ValueError(
                f"t_total/tau = {intervals} renormalizations; need at least n_blocks={self.n_blocks}"
            )
        return self

    @property
    def intervals(self) -> int:
        return max(1, round(self.t_total / self.tau))


@dataclass
class LyapunovEstimate:
    """
    Largest Lyapunov exponent with its running record.

    `convergence` has shape (M, 2): (time since the end of the transient,
    running estimate) after each renormalization. `log_growth` holds the
    per-interval log(d_i / delta0) values the estimate is built from.
    """
    lambda1:     float
    convergence: np.ndarray
    log_growth:  np.ndarray
    settings:    dict[str, Any] = field(default_factory=dict)
    seed:        int = 0

    def __post_init__(self) -> None:
        if len(self.convergence) == 0:
            raise ValueError("convergence series must not be empty")

    @property
    def tau(self) -> float:
        return float(self.settings["tau"])

    def stderr(self, n_blocks: int = MIN_BLOCKS) -> float:
        """Standard error of the block means of the per-interval growth rates."""
        if len(self.log_growth) < n_blocks:
            return math.nan
        blocks = np.array_split(self.log_growth, n_blocks)
        means = np.array([b.mean() / self.tau for b in blocks])
        return float(means.std(ddof=1) / math.sqrt(n_blocks))


@dataclass
class ChaosRow:
    """
    One line of the cross-class comparison.

    Failed rows keep their error text; values that were not computed are None
    so that equal inputs give equal rows.
    """
    system:  str
    n:       int | None
    lambda1: float | None = None
    stderr:  float | None = None
    seed:    int = 0
    error:   str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None
