"""Scenario documents, trajectory CSV files and SVG projections."""

from lorenz_covering.io.chart_generator import PALETTE, render_projections, render_svg
from lorenz_covering.io.csv_io import read_csv, write_csv
from lorenz_covering.io.models import (
    ColorBy,
    OutputKind,
    OutputSpec,
    RenderOptions,
    Scenario,
    TimeSpan,
    parse_projection,
)
from lorenz_covering.io.scenario import (
    SCENARIO_DIR_ENV,
    load_scenario,
    parse_scenario,
    resolve_scenario_path,
    run_scenario,
    scenario_json_schema,
    write_outputs,
)

__all__ = [
    "PALETTE",
    "SCENARIO_DIR_ENV",
    "ColorBy",
    "OutputKind",
    "OutputSpec",
    "RenderOptions",
    "Scenario",
    "TimeSpan",
    "load_scenario",
    "parse_projection",
    "parse_scenario",
    "read_csv",
    "render_projections",
    "render_svg",
    "resolve_scenario_path",
    "run_scenario",
    "scenario_json_schema",
    "write_csv",
    "write_outputs",
]
