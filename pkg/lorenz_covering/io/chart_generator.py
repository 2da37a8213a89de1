"""
SVG rendering of trajectory projections.

Generates:
  - one 2-D projection per call (render_svg), stroked per sheet when the
    trajectory carries colors
  - the (x,y), (x,z), (y,z) triple that stands in for a 3-D view
    (render_projections)

Matplotlib is imported lazily so the package is importable without it;
rendering is then skipped with a warning and None is returned. Output is
byte-identical for identical input (fixed hash salt, no date stamp).
"""

from __future__ import annotations

import io
import logging
from pathlib import Path

import numpy as np

from lorenz_covering.errors import TrajectoryFormatError
from lorenz_covering.integrate.models import Trajectory
from lorenz_covering.io.models import ColorBy, RenderOptions, parse_projection

log = logging.getLogger(__name__)

# ── Palette ───────────────────────────────────────────────────────────────────

_BG      = "#ffffff"
_BORDER  = "#30363d"
_TEXT    = "#1f2328"
_MUTED   = "#59636e"
_MONO    = "#0969da"   # single-stroke trajectories

# Sheet colours, indexed by color % len(PALETTE).
PALETTE = (
    "#0969da",   # blue
    "#cf222e",   # red
    "#1a7f37",   # green
    "#bf8700",   # amber
    "#8250df",   # purple
    "#bc4c00",   # orange
    "#1b7c83",   # teal
    "#6e7781",   # grey
)

_HASH_SALT = "lorenz-covering"


def _axis_values(traj: Trajectory, axis: str) -> np.ndarray:
    if axis in ("x", "y", "z"):
        return traj.cartesian().states[:, "xyz".index(axis)]
    polar = traj.polar()
    return polar.states[:, 0] if axis == "radius" else polar.states[:, 1]


def _caption(traj: Trajectory, colored: bool) -> str:
    system = traj.meta.get("system")
    label = "trajectory"
    if isinstance(system, dict):
        fam = system.get("family")
        label = {"standard": "standard", "l2": "L2", "l1": "L1"}.get(fam, f"L{system.get('n')}")
    text = f"{label} | {len(traj)} samples | t in [{traj.times[0]:.6g}, {traj.times[-1]:.6g}]"
    if colored and "covering_fold" in traj.meta:
        text += f" | colored, n={traj.meta['covering_fold']}"
    return text


def render_svg(
    traj: Trajectory,
    projection: str = "x,y",
    options: RenderOptions | None = None,
    path: str | Path | None = None,
) -> str | None:
    """
    Render `traj` projected on two axes and return the SVG document.

    When `path` is given the document is also written there. Returns None
    when matplotlib is not installed.

    Raises:
        TrajectoryFormatError: the trajectory is empty.
        ValueError:            the projection does not name two known axes.
    """
    if len(traj) == 0:
        raise TrajectoryFormatError("cannot render an empty trajectory")
    ax_h, ax_v = parse_projection(projection)
    options = options or RenderOptions()

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        from matplotlib.collections import LineCollection
    except ImportError:
        log.warning("matplotlib not installed; skipping render of %s projection", projection)
        return None

    h = _axis_values(traj, ax_h)
    v = _axis_values(traj, ax_v)
    colored = options.color_by == ColorBy.color and traj.colors is not None

    with matplotlib.rc_context({"svg.hashsalt": _HASH_SALT, "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(options.width_in, options.height_in), facecolor=_BG)
        ax.set_facecolor(_BG)
        ax.tick_params(colors=_MUTED, labelsize=8)
        for spine in ax.spines.values():
            spine.set_color(_BORDER)
            spine.set_linewidth(0.8)

        if len(traj) == 1:
            colour = PALETTE[int(traj.colors[0]) % len(PALETTE)] if colored else _MONO
            ax.plot(h, v, marker="o", markersize=4, linestyle="none", color=colour)
        else:
            segments = np.stack(
                [np.column_stack([h[:-1], v[:-1]]), np.column_stack([h[1:], v[1:]])], axis=1
            )
            if colored:
                seg_colours = [PALETTE[int(c) % len(PALETTE)] for c in traj.colors[:-1]]
            else:
                seg_colours = [_MONO] * len(segments)
            ax.add_collection(LineCollection(segments, colors=seg_colours, linewidths=options.line_width))
            ax.autoscale_view()

        ax.set_xlabel(ax_h, fontsize=9, color=_MUTED)
        ax.set_ylabel(ax_v, fontsize=9, color=_MUTED)
        if options.title:
            ax.set_title(options.title, fontsize=10, color=_TEXT)
        if options.caption:
            fig.text(0.5, 0.01, _caption(traj, colored), ha="center", fontsize=7, color=_MUTED)

        buf = io.StringIO()
        fig.savefig(buf, format="svg", facecolor=_BG, metadata={"Date": None})
        plt.close(fig)

    svg = buf.getvalue()
    if path is not None:
        out = Path(path)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(svg, encoding="utf-8")
        log.info("Saved %s projection: %s", projection, out)
    return svg


def render_projections(
    traj: Trajectory,
    path_prefix: str | Path,
    options: RenderOptions | None = None,
) -> list[Path]:
    """Write <prefix>_xy.svg, <prefix>_xz.svg and <prefix>_yz.svg."""
    written: list[Path] = []
    for proj in ("x,y", "x,z", "y,z"):
        out = Path(f"{path_prefix}_{proj.replace(',', '')}.svg")
        if render_svg(traj, proj, options, path=out) is not None:
            written.append(out)
    return written
