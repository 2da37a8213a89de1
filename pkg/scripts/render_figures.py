#!/usr/bin/env python3
"""
Render the figure analogues of the class into one output directory.

    fig1_standard_xz.svg      standard Lorenz attractor, (x, z)
    fig2_l2_xz.svg            normalized system L2, (x, z)
    fig3_covered_x1y1.svg     short covered L2 run, colored by sheet, (x1, y1)
    fig4_covered_{xy,xz,yz}.svg  the covered run as three 2-D projections
    fig5_l1_xz.svg            factorized attractor L1, (x, z)
    fig6_l3_xy.svg            attractor of L3, (x, y)

Usage:
    python scripts/render_figures.py --out-dir ./figures
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from lorenz_covering.covering.paths import cover_trajectory, factor_trajectory
from lorenz_covering.dynamics.models import CartesianState, SystemSpec
from lorenz_covering.integrate.models import IntegratorConfig
from lorenz_covering.integrate.solver import simulate
from lorenz_covering.io.chart_generator import render_projections, render_svg
from lorenz_covering.io.models import RenderOptions

log = logging.getLogger("render_figures")

START = CartesianState(1.0, 0.1, 0.5)
STANDARD_START = CartesianState(1.0, 1.0, 20.0)


def render_all(out_dir: Path, t_normalized: float = 400.0, t_standard: float = 40.0) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    cfg = IntegratorConfig(rel_tol=1e-8, abs_tol=1e-10, sample_interval=0.02)
    written: list[Path] = []

    def _svg(traj, proj: str, name: str, title: str) -> None:
        path = out_dir / name
        if render_svg(traj, proj, RenderOptions(title=title), path=path) is not None:
            written.append(path)

    standard = simulate(SystemSpec.standard(), STANDARD_START, 0.0, t_standard, cfg).slice_time(2.0)
    _svg(standard, "x,z", "fig1_standard_xz.svg", "Standard Lorenz system")

    l2 = simulate(SystemSpec.l2(), START, 0.0, t_normalized, cfg).slice_time(20.0)
    _svg(l2, "x,z", "fig2_l2_xz.svg", "Normalized Lorenz system (L2)")

    covered = cover_trajectory(l2.slice_time(t_normalized - 60.0), 2)
    _svg(covered, "x,y", "fig3_covered_x1y1.svg", "Covered (colored) L2, x1-y1 projection")
    written.extend(render_projections(covered, out_dir / "fig4_covered", RenderOptions()))

    _svg(factor_trajectory(l2, 2), "x,z", "fig5_l1_xz.svg", "Factorized Lorenz attractor (L1)")

    l3 = simulate(SystemSpec.ln(3), START, 0.0, t_normalized, cfg).slice_time(20.0)
    _svg(l3, "x,y", "fig6_l3_xy.svg", "Attractor of L3")
    return written


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Render the figure analogues as SVG files")
    parser.add_argument("--out-dir", default="./figures", help="Output directory (default: ./figures)")
    parser.add_argument("--t-normalized", type=float, default=400.0,
                        help="Run length of the normalized systems (default: 400)")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")

    written = render_all(Path(args.out_dir), t_normalized=args.t_normalized)
    if not written:
        log.error("No figures written; install the 'render' extra (matplotlib)")
        return 2
    for path in written:
        log.info("Wrote %s", path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
