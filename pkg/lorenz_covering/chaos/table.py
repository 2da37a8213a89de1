"""
Cross-class chaos comparison: one Lyapunov estimate per system.

Rows are independent; with workers > 1 they run in a process pool and are
still returned in input order. A failing row keeps its error message and the
other rows are computed as usual.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from lorenz_covering.chaos.lyapunov import lyapunov_max
from lorenz_covering.chaos.models import ChaosRow, LyapunovConfig
from lorenz_covering.dynamics.models import CartesianState, SystemSpec
from lorenz_covering.errors import LorenzCoveringError, ParameterDomainError

log = logging.getLogger(__name__)

# Off-axis start shared by every row; the transient carries it onto the attractor.
DEFAULT_INITIAL_STATE = CartesianState(0.5, 0.2, 0.6)
STANDARD_INITIAL_STATE = CartesianState(1.0, 1.0, 20.0)


def default_initial_state(spec: SystemSpec) -> CartesianState:
    return STANDARD_INITIAL_STATE if spec.fold is None else DEFAULT_INITIAL_STATE


def _row(spec: SystemSpec, s0: CartesianState | None, cfg: LyapunovConfig) -> ChaosRow:
    start = s0 if s0 is not None else default_initial_state(spec)
    try:
        est = lyapunov_max(spec, start, cfg)
    except LorenzCoveringError as exc:
        log.warning("Chaos row %s failed: %s", spec.label, exc)
        return ChaosRow(system=spec.label, n=spec.fold, seed=cfg.seed, error=str(exc))
    stderr = est.stderr(cfg.n_blocks)
    return ChaosRow(
        system=spec.label,
        n=spec.fold,
        lambda1=est.lambda1,
        stderr=None if math.isnan(stderr) else stderr,
        seed=cfg.seed,
    )


def chaos_table(
    specs: Sequence[SystemSpec],
    cfg: LyapunovConfig | None = None,
    workers: int = 1,
    s0: CartesianState | None = None,
) -> list[ChaosRow]:
    """One ChaosRow per spec, in input order."""
    if not specs:
        raise ParameterDomainError("chaos_table needs at least one system")
    if workers < 1:
        raise ParameterDomainError(f"workers must be >= 1, got {workers}")
    cfg = cfg or LyapunovConfig()
    log.info("Chaos table: %d systems, %d worker(s), seed %d", len(specs), workers, cfg.seed)

    if workers == 1 or len(specs) == 1:
        rows = []
        for spec in specs:
            log.debug("Chaos row %s", spec.label)
            rows.append(_row(spec, s0, cfg))
        return rows

    with ProcessPoolExecutor(max_workers=min(workers, len(specs))) as pool:
        return list(pool.map(_row, specs, [s0] * len(specs), [cfg] * len(specs)))
