"""Lorenz-type systems: normalization, covering-coloring, Z_n factorizations and extensions, chaos comparison."""

from __future__ import annotations

import importlib

__version__ = "0.1.0"

# Public name -> defining sub-package. Resolved on first access so that
# `import lorenz_covering` does not pull in scipy, pandas or matplotlib.
_LAZY = {
    "CartesianState": "dynamics",
    "PolarState": "dynamics",
    "StandardParams": "dynamics",
    "NormalizedParams": "dynamics",
    "SystemSpec": "dynamics",
    "fixed_points": "dynamics",
    "params_normalize": "dynamics",
    "params_denormalize": "dynamics",
    "cover_point": "covering",
    "cover_trajectory": "covering",
    "lift_trajectory": "covering",
    "IntegratorConfig": "integrate",
    "Trajectory": "integrate",
    "flow": "integrate",
    "simulate": "integrate",
    "LyapunovConfig": "chaos",
    "lyapunov_max": "chaos",
    "chaos_table": "chaos",
    "parse_scenario": "io",
    "read_csv": "io",
    "write_csv": "io",
    "render_svg": "io",
}


def __getattr__(name: str):
    """Lazy imports; avoids loading all deps at package import time."""
    if name in _LAZY:
        module = importlib.import_module(f"lorenz_covering.{_LAZY[name]}")
        return getattr(module, name)
    raise AttributeError(f"module 'lorenz_covering' has no attribute {name!r}")


__all__ = sorted(_LAZY)
