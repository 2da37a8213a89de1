"""
Tests for the chaos package: Lyapunov estimation, the divergence-slope check,
the symmetry defect, the comparison table and its markdown report.

The acceptance-level estimates (literature anchor, cross-class agreement,
time rescaling, seed robustness, L3 symmetry) run for minutes and carry the
`slow` marker.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError

from lorenz_covering.chaos.lyapunov import divergence_slope, lyapunov_max
from lorenz_covering.chaos.models import ChaosRow, LyapunovConfig, LyapunovEstimate
from lorenz_covering.chaos.report_generator import render_chaos_report, write_chaos_report
from lorenz_covering.chaos.symmetry import cloud_diameter, symmetry_defect
from lorenz_covering.chaos.table import DEFAULT_INITIAL_STATE, chaos_table, default_initial_state
from lorenz_covering.covering.cover import cover_point
from lorenz_covering.dynamics.models import CartesianState, StandardParams, SystemSpec
from lorenz_covering.dynamics.transforms import state_normalize, time_scale
from lorenz_covering.errors import NumericalFailure, ParameterDomainError
from lorenz_covering.integrate.solver import simulate

SHORT = LyapunovConfig(t_total=100.0, transient=5.0)


def _contracting(u: np.ndarray) -> np.ndarray:
    return -u


def _combined(*errors: float) -> float:
    return math.sqrt(sum(e * e for e in errors))


# ── Configuration and result types ────────────────────────────────────────────

@pytest.mark.unit
class TestLyapunovConfig:
    def test_defaults(self):
        cfg = LyapunovConfig()
        assert (cfg.t_total, cfg.tau, cfg.delta0, cfg.transient) == (2000.0, 0.5, 1e-8, 50.0)
        assert cfg.intervals == 4000

    def test_total_time_floor(self):
        with pytest.raises(ValidationError):
            LyapunovConfig(t_total=50.0)

    def test_too_few_intervals_for_blocks(self):
        with pytest.raises(ValidationError, match="n_blocks"):
            LyapunovConfig(t_total=100.0, tau=20.0)

    def test_delta0_must_be_small(self):
        with pytest.raises(ValidationError):
            LyapunovConfig(delta0=0.1)

    def test_empty_convergence_rejected(self):
        with pytest.raises(ValueError):
            LyapunovEstimate(lambda1=0.0, convergence=np.empty((0, 2)), log_growth=np.empty(0))

    def test_stderr_of_constant_growth_is_zero(self):
        est = LyapunovEstimate(
            lambda1=1.0,
            convergence=np.array([[0.5, 1.0]]),
            log_growth=np.full(40, 0.5),
            settings={"tau": 0.5},
        )
        assert est.stderr() == pytest.approx(0.0, abs=1e-15)

    def test_stderr_needs_enough_intervals(self):
        est = LyapunovEstimate(lambda1=1.0, convergence=np.ones((3, 2)), log_growth=np.ones(3),
                               settings={"tau": 0.5})
        assert math.isnan(est.stderr(10))


# ── Benettin estimate ─────────────────────────────────────────────────────────

@pytest.mark.unit
class TestLyapunovMax:
    def test_linear_contraction(self):
        cfg = LyapunovConfig(t_total=100.0, transient=0.0)
        est = lyapunov_max(_contracting, np.array([1.0, 1.0, 1.0]), cfg)
        assert est.lambda1 == pytest.approx(-1.0, abs=0.01)

    def test_convergence_record(self):
        est = lyapunov_max(SystemSpec.l2(), DEFAULT_INITIAL_STATE, SHORT)
        assert est.convergence.shape == (SHORT.intervals, 2)
        assert est.lambda1 == est.convergence[-1, 1]
        np.testing.assert_allclose(est.convergence[:, 0], SHORT.tau * np.arange(1, SHORT.intervals + 1))
        assert est.lambda1 == pytest.approx(est.log_growth.sum() / SHORT.t_total, rel=1e-12)
        assert est.settings["seed"] == 0 and est.settings["transient"] == 5.0

    def test_seeded_runs_are_identical(self):
        a = lyapunov_max(SystemSpec.l2(), DEFAULT_INITIAL_STATE, SHORT.model_copy(update={"seed": 7}))
        b = lyapunov_max(SystemSpec.l2(), DEFAULT_INITIAL_STATE, SHORT.model_copy(update={"seed": 7}))
        assert a.lambda1 == b.lambda1
        np.testing.assert_array_equal(a.convergence, b.convergence)

    def test_seed_changes_direction(self):
        a = lyapunov_max(SystemSpec.l2(), DEFAULT_INITIAL_STATE, SHORT)
        b = lyapunov_max(SystemSpec.l2(), DEFAULT_INITIAL_STATE, SHORT.model_copy(update={"seed": 1}))
        assert a.lambda1 != b.lambda1
        assert b.seed == 1

    def test_failure_keeps_partial_record(self):
        cfg = LyapunovConfig(t_total=100.0, transient=0.0)
        with pytest.raises(NumericalFailure) as exc:
            lyapunov_max(lambda u: u * u, np.array([0.4, 0.4, 0.4]), cfg)
        assert exc.value.partial.shape == (4, 2)
        assert isinstance(exc.value.__cause__, NumericalFailure)

    def test_failure_in_transient_has_empty_record(self):
        cfg = LyapunovConfig(t_total=100.0, transient=20.0)
        with pytest.raises(NumericalFailure, match="transient") as exc:
            lyapunov_max(lambda u: u * u, np.array([0.4, 0.4, 0.4]), cfg)
        assert exc.value.partial.shape == (0, 2)
        assert isinstance(exc.value.__cause__, NumericalFailure)

    def test_polar_quotient_field(self):
        est = lyapunov_max(SystemSpec.l1(), DEFAULT_INITIAL_STATE, SHORT)
        assert est.settings["field"] == "L1"
        assert math.isfinite(est.lambda1)

    def test_stable_equilibrium_has_no_positive_exponent(self):
        params = StandardParams(rayleigh=10.0)
        c = math.sqrt(params.b * (params.rayleigh - 1.0))
        cfg = LyapunovConfig(t_total=100.0, transient=0.0)
        est = lyapunov_max(SystemSpec.standard(params), CartesianState(c + 0.01, c, params.rayleigh - 1.0), cfg)
        assert est.lambda1 <= 0.0

    def test_exact_equilibrium_start(self):
        params = StandardParams(rayleigh=10.0)
        c = math.sqrt(params.b * (params.rayleigh - 1.0))
        cfg = LyapunovConfig(t_total=100.0, transient=0.0)
        est = lyapunov_max(SystemSpec.standard(params), CartesianState(c, c, params.rayleigh - 1.0), cfg)
        assert est.lambda1 < 0.0


# ── Symmetry defect ───────────────────────────────────────────────────────────

@pytest.mark.unit
class TestSymmetryDefect:
    def test_exactly_symmetric_cloud(self, rng):
        seed_pts = rng.normal(size=(200, 2)) + [2.0, 0.0]
        angles = [2.0 * math.pi * k / 3 for k in range(3)]
        cloud = np.vstack([
            seed_pts @ np.array([[math.cos(a), math.sin(a)], [-math.sin(a), math.cos(a)]]) for a in angles
        ])
        assert symmetry_defect(cloud, 3) < 1e-12

    def test_one_sided_cloud(self, rng):
        cloud = rng.uniform(0.0, 1.0, size=(500, 2)) + [3.0, 0.0]
        assert symmetry_defect(cloud, 3) > 0.5

    def test_trivial_rotation(self, rng):
        assert symmetry_defect(rng.normal(size=(50, 2)), 1) == pytest.approx(0.0, abs=1e-12)

    def test_shape_checked(self):
        with pytest.raises(ParameterDomainError):
            symmetry_defect(np.zeros((10, 3)), 3)
        with pytest.raises(ParameterDomainError):
            symmetry_defect(np.zeros((10, 2)), 0)

    def test_diameter(self):
        square = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]])
        assert cloud_diameter(square) == pytest.approx(math.sqrt(2.0))

    def test_collinear_diameter(self):
        line = np.column_stack([np.arange(5.0), np.zeros(5)])
        assert cloud_diameter(line) == pytest.approx(4.0)


# ── Table and report ──────────────────────────────────────────────────────────

@pytest.mark.integration
class TestChaosTable:
    def test_empty_list_rejected(self):
        with pytest.raises(ParameterDomainError, match="at least one"):
            chaos_table([], SHORT)

    def test_duplicate_specs_give_identical_rows(self):
        rows = chaos_table([SystemSpec.l2(), SystemSpec.l2()], SHORT)
        assert rows[0] == rows[1]
        assert rows[0].ok and rows[0].seed == 0

    def test_failed_row_keeps_others(self):
        on_axis = CartesianState(0.0, 0.0, 1.0)
        rows = chaos_table([SystemSpec.l2(), SystemSpec.l1()], SHORT, s0=on_axis)
        assert [r.system for r in rows] == ["L2", "L1"]
        assert rows[0].ok
        assert not rows[1].ok and "z-axis" in rows[1].error
        assert rows[1].lambda1 is None and rows[1].stderr is None

    def test_duplicate_failed_rows_are_equal(self):
        on_axis = CartesianState(0.0, 0.0, 1.0)
        rows = chaos_table([SystemSpec.l1(), SystemSpec.l1()], SHORT, s0=on_axis)
        assert not rows[0].ok
        assert rows[0] == rows[1]

    def test_pool_preserves_order(self):
        specs = [SystemSpec.ln(3), SystemSpec.l1(), SystemSpec.l2()]
        parallel = chaos_table(specs, SHORT, workers=2)
        serial = chaos_table(specs, SHORT)
        assert [r.system for r in parallel] == ["L3", "L1", "L2"]
        assert parallel == serial

    def test_default_initial_state(self):
        assert default_initial_state(SystemSpec.standard()).z == 20.0
        assert default_initial_state(SystemSpec.ln(4)) == DEFAULT_INITIAL_STATE


@pytest.mark.unit
class TestChaosReport:
    ROWS = [
        ChaosRow(system="L1", n=1, lambda1=0.0551, stderr=0.002),
        ChaosRow(system="L2", n=2, lambda1=0.0556, stderr=0.003),
        ChaosRow(system="L3", n=3, error="step underflow"),
    ]

    def test_table_and_spread(self):
        text = render_chaos_report(self.ROWS)
        assert "| L1 | 1 | 0.05510 | 0.00200 | 0 | ok |" in text
        assert "| L3 | 3 | N/A | N/A | 0 | failed: step underflow |" in text
        assert "Largest difference in lambda1: 0.00050" in text

    def test_settings_section(self, out_dir):
        path = write_chaos_report(self.ROWS, out_dir / "reports" / "chaos.md", SHORT)
        text = path.read_text(encoding="utf-8")
        assert path.exists()
        assert "| t_total | 100.0 |" in text
        assert "rel_tol=1e-09" in text

    def test_single_row_has_no_spread(self):
        assert "no spread computed" in render_chaos_report(self.ROWS[:1])


# ── Acceptance-level estimates ────────────────────────────────────────────────

@pytest.mark.slow
class TestChaosAcceptance:
    def test_standard_lorenz_anchor(self):
        est = lyapunov_max(SystemSpec.standard(), CartesianState(1.0, 1.0, 20.0), LyapunovConfig())
        assert est.lambda1 == pytest.approx(0.906, abs=0.04)

    def test_divergence_slope_agrees_with_renormalization(self):
        cfg = LyapunovConfig(t_total=400.0)
        start = CartesianState(1.0, 1.0, 20.0)
        est = lyapunov_max(SystemSpec.standard(), start, cfg)
        slope = divergence_slope(SystemSpec.standard(), start, cfg, n_starts=20, horizon=40.0)
        assert slope == pytest.approx(est.lambda1, abs=0.1)

    def test_l2_and_l1_agree(self):
        cfg = LyapunovConfig()
        l2 = lyapunov_max(SystemSpec.l2(), DEFAULT_INITIAL_STATE, cfg)
        l1 = lyapunov_max(SystemSpec.l1(), cover_point(DEFAULT_INITIAL_STATE, 2), cfg)
        assert abs(l2.lambda1 - l1.lambda1) < 0.05

    def test_every_member_is_chaotic(self):
        rows = chaos_table([SystemSpec.l1(), SystemSpec.l2(), SystemSpec.ln(3)], LyapunovConfig(), workers=3)
        assert all(r.ok for r in rows)
        assert all(r.lambda1 > 0.0 for r in rows)

    def test_l3_and_l1_agree(self):
        rows = chaos_table([SystemSpec.l1(), SystemSpec.ln(3)], LyapunovConfig(), workers=2)
        assert all(r.ok for r in rows)
        assert rows[0].lambda1 > 0.0 and rows[1].lambda1 > 0.0
        assert abs(rows[0].lambda1 - rows[1].lambda1) < 0.05

    def test_time_rescaling_law(self, standard_params):
        scale = time_scale(standard_params)
        start = CartesianState(1.0, 1.0, 20.0)
        std = lyapunov_max(SystemSpec.standard(), start, LyapunovConfig(t_total=500.0))
        s0, _ = state_normalize(start, 0.0, standard_params)
        l2_cfg = LyapunovConfig(t_total=500.0 * scale, tau=0.5 * scale, transient=50.0 * scale)
        l2 = lyapunov_max(SystemSpec.l2(), s0, l2_cfg)
        spread = _combined(std.stderr(), scale * l2.stderr())
        assert abs(std.lambda1 - scale * l2.lambda1) <= max(3.0 * spread, 0.05)

    def test_seed_robustness(self, rng):
        cfg = LyapunovConfig(t_total=500.0)
        base = simulate(SystemSpec.standard(), CartesianState(1.0, 1.0, 20.0), 0.0, 60.0).slice_time(10.0)
        picks = rng.choice(len(base), size=5, replace=False)
        estimates = [
            lyapunov_max(SystemSpec.standard(), base.state_at(int(i)), cfg.model_copy(update={"seed": k}))
            for k, i in enumerate(picks)
        ]
        values = np.array([e.lambda1 for e in estimates])
        errors = np.array([e.stderr() for e in estimates])
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                assert abs(values[i] - values[j]) <= 3.0 * _combined(errors[i], errors[j])

    def test_l3_attractor_symmetry(self):
        traj = simulate(SystemSpec.ln(3), DEFAULT_INITIAL_STATE, 0.0, 550.0).slice_time(50.0)
        assert symmetry_defect(traj.xyz()[:, :2], 3) < 0.05
