"""
Markdown report of a chaos table.

Produces one file with the comparison table, the spread of the estimates
across the class and the settings that generated them.
"""

from __future__ import annotations

import math
from datetime import datetime, timezone
from pathlib import Path

from lorenz_covering.chaos.models import ChaosRow, LyapunovConfig


def _fmt(v: float | None, decimals: int = 5) -> str:
    return "N/A" if v is None or math.isnan(v) else f"{v:.{decimals}f}"


def write_chaos_report(
    rows: list[ChaosRow],
    path: str | Path,
    cfg: LyapunovConfig | None = None,
) -> Path:
    """Write the report to `path` (parent directories created) and return it."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(render_chaos_report(rows, cfg), encoding="utf-8")
    return out


def render_chaos_report(rows: list[ChaosRow], cfg: LyapunovConfig | None = None) -> str:
    now = datetime.now(timezone.utc).strftime("%d %b %Y %H:%M UTC")
    parts = []

    # ── Header ────────────────────────────────────────────────────────────────
    parts.append("# Chaos comparison across the class")
    parts.append(f"*Generated {now} | {len(rows)} system(s)*")
    parts.append("")

    # ── Table ─────────────────────────────────────────────────────────────────
    parts.append("| System | n | lambda1 | stderr | seed | status |")
    parts.append("|--------|---|---------|--------|------|--------|")
    for row in rows:
        status = "ok" if row.ok else f"failed: {row.error}"
        n = "-" if row.n is None else str(row.n)
        parts.append(
            f"| {row.system} | {n} | {_fmt(row.lambda1)} | {_fmt(row.stderr)} | {row.seed} | {status} |"
        )
    parts.append("")

    # ── Spread ────────────────────────────────────────────────────────────────
    quotient = [r for r in rows if r.ok and r.n is not None]
    parts.append("## Spread")
    if len(quotient) < 2:
        parts.append("*Fewer than two successful normalized-time rows; no spread computed.*")
    else:
        values = [r.lambda1 for r in quotient]
        worst = max((r.stderr for r in quotient if r.stderr is not None), default=None)
        parts.append(f"- Largest difference in lambda1: {_fmt(max(values) - min(values))}")
        parts.append(f"- Largest single stderr: {_fmt(worst)}")
    parts.append("")

    # ── Settings ──────────────────────────────────────────────────────────────
    if cfg is not None:
        parts.append("## Settings")
        parts.append("")
        parts.append("| Setting | Value |")
        parts.append("|---------|-------|")
        for key in ("t_total", "tau", "delta0", "transient", "seed", "n_blocks"):
            parts.append(f"| {key} | {getattr(cfg, key)} |")
        integ = cfg.integrator
        parts.append(f"| integrator | {integ.mode.value}, rel_tol={integ.rel_tol:g}, abs_tol={integ.abs_tol:g} |")
        parts.append("")
        parts.append(
            "*Standard-system rows are in the original time unit; normalized rows are in "
            "normalized time. Multiply a normalized-time exponent by sqrt((r-1)*sigma) to compare.*"
        )
    return "\n".join(parts) + "\n"
