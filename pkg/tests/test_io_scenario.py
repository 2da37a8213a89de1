"""
Tests for io/scenario.py and io/models.py.

Covers strict parsing (unknown keys, semantic errors naming their key,
syntax errors with line/column), the scenario directory lookup, the
published schema, and running scenarios with normalization and covering.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from lorenz_covering.covering.models import CoveringSpec
from lorenz_covering.dynamics.models import CartesianState, StandardParams, SystemFamily, SystemSpec
from lorenz_covering.dynamics.transforms import state_normalize, time_scale
from lorenz_covering.errors import ScenarioError
from lorenz_covering.integrate.models import IntegratorConfig
from lorenz_covering.integrate.solver import simulate
from lorenz_covering.io.models import SCHEMA_VERSION, ColorBy, OutputKind, parse_projection
from lorenz_covering.io.scenario import (
    SCENARIO_DIR_ENV,
    load_scenario,
    parse_scenario,
    resolve_scenario_path,
    run_scenario,
    scenario_json_schema,
    write_outputs,
)

REPO_SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def _doc(**overrides) -> str:
    doc = {"schema_version": 1, "time": {"t1": 1.0}, "outputs": [{"kind": "csv", "path": "out.csv"}]}
    doc.update(overrides)
    return json.dumps(doc)


# ── Parsing ───────────────────────────────────────────────────────────────────

@pytest.mark.unit
class TestParseScenario:
    def test_minimal_document_defaults(self):
        sc = parse_scenario(_doc())
        assert sc.schema_version == SCHEMA_VERSION
        assert sc.system.family == SystemFamily.l2
        assert sc.initial_state == (1.0, 0.1, 0.5)
        assert sc.time.t0 == 0.0
        assert sc.integrator == IntegratorConfig()
        assert sc.outputs[0].kind == OutputKind.csv
        assert sc.cover is None and not sc.normalize

    def test_unknown_top_level_key(self):
        with pytest.raises(ScenarioError, match="unknown key 'colour'") as exc:
            parse_scenario(_doc(colour="red"))
        assert exc.value.key == "colour"

    def test_unknown_nested_key_is_dotted(self):
        outputs = [{"kind": "svg", "path": "a.svg", "colour": "color"}]
        with pytest.raises(ScenarioError, match=r"unknown key 'outputs\.0\.colour'"):
            parse_scenario(_doc(outputs=outputs))

    def test_normalize_requires_rayleigh_above_one(self):
        system = {"family": "standard", "params": {"rayleigh": 0.5}}
        with pytest.raises(ScenarioError, match="r > 1"):
            parse_scenario(_doc(system=system, normalize=True))

    def test_normalize_only_for_standard_system(self):
        with pytest.raises(ScenarioError, match="standard system only"):
            parse_scenario(_doc(normalize=True))

    def test_syntax_error_position(self):
        text = '{\n  "schema_version": 1,\n  "time": {"t1": 1.0,}\n}'
        with pytest.raises(ScenarioError, match="invalid JSON") as exc:
            parse_scenario(text)
        assert exc.value.line == 3
        assert exc.value.column is not None
        assert "line 3" in str(exc.value)

    def test_document_must_be_object(self):
        with pytest.raises(ScenarioError, match="JSON object"):
            parse_scenario("[1, 2]")

    def test_wrong_schema_version(self):
        with pytest.raises(ScenarioError, match="schema_version"):
            parse_scenario(_doc(schema_version=2))

    def test_time_order(self):
        with pytest.raises(ScenarioError, match="t1 must be > t0"):
            parse_scenario(_doc(time={"t0": 2.0, "t1": 1.0}))

    def test_outputs_required(self):
        with pytest.raises(ScenarioError, match="outputs"):
            parse_scenario(_doc(outputs=[]))

    def test_ln_without_n(self):
        with pytest.raises(ScenarioError, match="requires n"):
            parse_scenario(_doc(system={"family": "ln"}))

    @pytest.mark.parametrize("cover", [3, {"n": 3}])
    def test_cover_accepts_fold_or_object(self, cover):
        assert parse_scenario(_doc(cover=cover)).cover == CoveringSpec(n=3)

    @pytest.mark.parametrize("cover", [0, {"n": 0}, {"n": 2, "sheets": 4}])
    def test_bad_cover_names_its_key(self, cover):
        with pytest.raises(ScenarioError, match="cover"):
            parse_scenario(_doc(cover=cover))

    def test_projection_normalized(self):
        sc = parse_scenario(_doc(outputs=[{"kind": "svg", "path": "a.svg", "projection": " X , Z "}]))
        assert sc.outputs[0].projection == "x,z"
        assert sc.outputs[0].color_by == ColorBy.color

    def test_bad_projection(self):
        with pytest.raises(ValueError):
            parse_projection("x,x")
        with pytest.raises(ValueError):
            parse_projection("x,w")
        assert parse_projection("radius,angle") == ("radius", "angle")

    def test_schema_lists_top_level_keys(self):
        schema = scenario_json_schema()
        assert {"schema_version", "system", "time", "outputs", "cover"} <= set(schema["properties"])
        assert schema["additionalProperties"] is False

    @pytest.mark.parametrize("name", sorted(p.name for p in REPO_SCENARIOS.glob("*.json")))
    def test_shipped_scenarios_parse(self, name):
        load_scenario(REPO_SCENARIOS / name)


# ── Lookup ────────────────────────────────────────────────────────────────────

@pytest.mark.unit
class TestScenarioLookup:
    def test_env_directory(self, tmp_path, monkeypatch):
        (tmp_path / "run.json").write_text(_doc(), encoding="utf-8")
        monkeypatch.setenv(SCENARIO_DIR_ENV, str(tmp_path))
        monkeypatch.chdir(tmp_path.parent)
        assert resolve_scenario_path("run.json") == tmp_path / "run.json"
        assert load_scenario("run.json").time.t1 == 1.0

    def test_missing_file(self, tmp_path, monkeypatch):
        monkeypatch.delenv(SCENARIO_DIR_ENV, raising=False)
        with pytest.raises(ScenarioError, match="cannot read scenario"):
            load_scenario(tmp_path / "absent.json")


# ── Execution ─────────────────────────────────────────────────────────────────

@pytest.mark.integration
class TestRunScenario:
    def test_plain_run_matches_simulate(self):
        sc = parse_scenario(_doc(time={"t1": 2.0}))
        traj = run_scenario(sc)
        direct = simulate(SystemSpec.l2(), CartesianState(1.0, 0.1, 0.5), 0.0, 2.0)
        np.testing.assert_array_equal(traj.states, direct.states)

    def test_normalized_run(self, standard_params):
        system = {"family": "standard"}
        sc = parse_scenario(_doc(system=system, normalize=True, initial_state=[1.0, 1.0, 20.0], time={"t1": 0.5}))
        traj = run_scenario(sc)
        s0, _ = state_normalize(CartesianState(1.0, 1.0, 20.0), 0.0, standard_params)
        np.testing.assert_allclose(traj.states[0], s0.as_array())
        assert traj.times[-1] == pytest.approx(0.5 * time_scale(standard_params))
        assert traj.meta["system"]["family"] == "l2"
        assert traj.meta["normalized_from"]["family"] == "standard"

    def test_covered_run_has_colors(self):
        sc = parse_scenario(_doc(time={"t1": 5.0}, cover=2))
        traj = run_scenario(sc)
        assert traj.colors is not None
        assert traj.meta["system"]["family"] == "l1"

    def test_write_outputs_csv(self, out_dir):
        sc = parse_scenario(_doc(outputs=[{"kind": "csv", "path": str(out_dir / "run.csv")}]))
        written = write_outputs(run_scenario(sc), sc)
        assert written == [out_dir / "run.csv"]
        assert written[0].read_text(encoding="utf-8").splitlines()[-1].startswith("1,")

    def test_normalize_with_custom_params(self):
        params = StandardParams(sigma=16.0, rayleigh=45.92, b=4.0)
        sc = parse_scenario(_doc(system={"family": "standard", "params": params.model_dump()}, normalize=True))
        traj = run_scenario(sc)
        assert traj.meta["system"]["params"]["gamma"] == pytest.approx(0.875)
