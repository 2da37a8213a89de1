"""Largest-Lyapunov-exponent estimation and the cross-class chaos comparison."""

from lorenz_covering.chaos.lyapunov import divergence_slope, lyapunov_max
from lorenz_covering.chaos.models import ChaosRow, LyapunovConfig, LyapunovEstimate
from lorenz_covering.chaos.report_generator import render_chaos_report, write_chaos_report
from lorenz_covering.chaos.symmetry import cloud_diameter, symmetry_defect
from lorenz_covering.chaos.table import chaos_table, default_initial_state

__all__ = [
    "ChaosRow",
    "LyapunovConfig",
    "LyapunovEstimate",
    "chaos_table",
    "cloud_diameter",
    "default_initial_state",
    "divergence_slope",
    "lyapunov_max",
    "render_chaos_report",
    "symmetry_defect",
    "write_chaos_report",
]
