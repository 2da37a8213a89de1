"""
Scenario parsing and execution.

Documents are JSON with a top-level schema_version. Parsing is strict:
unknown keys are rejected and every error names the offending key (or the
line and column of a syntax error).

Usage:
    scenario = load_scenario("l2_attractor.json")
    traj = run_scenario(scenario)
    write_outputs(traj, scenario)
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from lorenz_covering.covering.paths import cover_trajectory
from lorenz_covering.dynamics.models import CartesianState, StandardParams, SystemSpec
from lorenz_covering.dynamics.transforms import params_normalize, state_normalize, time_normalize
from lorenz_covering.errors import ScenarioError
from lorenz_covering.integrate.models import Trajectory
from lorenz_covering.integrate.solver import simulate
from lorenz_covering.io.models import OutputKind, RenderOptions, Scenario

log = logging.getLogger(__name__)

SCENARIO_DIR_ENV = "LORENZ_COVERING_SCENARIO_DIR"


# ── Parsing ───────────────────────────────────────────────────────────────────

def _describe(err: dict[str, Any]) -> tuple[str, str]:
    key = ".".join(str(p) for p in err["loc"]) or "<document>"
    if err["type"] == "extra_forbidden":
        return key, f"unknown key '{key}'"
    return key, f"{key}: {err['msg']}"


def scenario_error_from(exc: ValidationError) -> ScenarioError:
    """First validation error of `exc` as a ScenarioError naming its key."""
    errors = exc.errors()
    key, message = _describe(errors[0])
    if len(errors) > 1:
        message += f" (and {len(errors) - 1} more error(s))"
    return ScenarioError(message, key=key)


def parse_scenario(text: str) -> Scenario:
    """
    Validate a scenario document.

    Raises:
        ScenarioError: syntax error (with line/column) or a semantic error
                       naming the offending key and constraint.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict):
        raise ScenarioError("scenario document must be a JSON object")
    try:
        return Scenario.model_validate(data)
    except ValidationError as exc:
        raise scenario_error_from(exc) from exc


def resolve_scenario_path(name: str | Path) -> Path:
    """`name` as given if it exists, else relative to $LORENZ_COVERING_SCENARIO_DIR."""
    path = Path(name)
    if path.exists() or path.is_absolute():
        return path
    base = os.environ.get(SCENARIO_DIR_ENV)
    if base:
        candidate = Path(base) / path
        if candidate.exists():
            return candidate
    return path


def load_scenario(name: str | Path) -> Scenario:
    path = resolve_scenario_path(name)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario {path}: {exc.strerror}") from exc
    log.info("Loaded scenario %s", path)
    return parse_scenario(text)


def scenario_json_schema() -> dict[str, Any]:
    """JSON schema of the current scenario format."""
    return Scenario.model_json_schema()


# ── Execution ─────────────────────────────────────────────────────────────────

def run_scenario(scenario: Scenario) -> Trajectory:
    """Integrate the scenario's system and apply the optional covering."""
    spec = scenario.system
    s0 = CartesianState(*scenario.initial_state)
    t0, t1 = scenario.time.t0, scenario.time.t1
    meta: dict[str, Any] = {}

    if scenario.normalize:
        params = spec.params
        assert isinstance(params, StandardParams)
        s0, t0 = state_normalize(s0, t0, params)
        t1 = time_normalize(t1, params)
        meta["normalized_from"] = spec.model_dump(mode="json")
        spec = SystemSpec.l2(params_normalize(params))

    traj = simulate(spec, s0, t0, t1, scenario.integrator)
    if meta:
        traj.meta.update(meta)
    if scenario.cover is not None:
        traj = cover_trajectory(traj, scenario.cover.n)
    return traj


def write_outputs(traj: Trajectory, scenario: Scenario) -> list[Path]:
    """Write every requested output; svg outputs are skipped without matplotlib."""
    from lorenz_covering.io.chart_generator import render_svg
    from lorenz_covering.io.csv_io import write_csv

    written: list[Path] = []
    for out in scenario.outputs:
        if out.kind == OutputKind.csv:
            written.append(write_csv(traj, out.path))
        else:
            options = RenderOptions(color_by=out.color_by)
            if render_svg(traj, out.projection, options, path=out.path) is not None:
                written.append(Path(out.path))
    return written
