"""
Tests for the standard <-> normalized change of variables and fixed points.

Covers:
  - canonical parameter values and parameter round trips
  - domain errors (rayleigh <= 1, no standard-form preimage)
  - state/time round trips and the conjugacy of the two vector fields
  - SystemSpec validation and closed-form equilibria
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError

from lorenz_covering.dynamics.fields import vf_L2, vf_standard
from lorenz_covering.dynamics.fixed_points import fixed_points
from lorenz_covering.dynamics.models import (
    CartesianState,
    CoordKind,
    NormalizedParams,
    PolarState,
    StandardParams,
    SystemFamily,
    SystemSpec,
)
from lorenz_covering.dynamics.transforms import (
    params_denormalize,
    params_normalize,
    rotate,
    state_denormalize,
    state_normalize,
    time_denormalize,
    time_normalize,
    time_scale,
    to_cartesian,
    to_polar,
)
from lorenz_covering.errors import ParameterDomainError

pytestmark = pytest.mark.unit


# ── Parameters ────────────────────────────────────────────────────────────────

class TestParamsNormalize:
    def test_canonical_values(self):
        p = params_normalize(StandardParams.canonical())
        assert p.mu == pytest.approx(11.0 / math.sqrt(270.0), rel=1e-14)
        assert p.beta == pytest.approx((8.0 / 3.0) / math.sqrt(270.0), rel=1e-14)
        assert p.gamma == pytest.approx(13.0 / 15.0, rel=1e-14)
        assert p.mu == pytest.approx(0.669440, abs=5e-6)
        assert p.beta == pytest.approx(0.162289, abs=1e-6)

    def test_canonical_shortcut(self):
        assert NormalizedParams.canonical() == params_normalize(StandardParams.canonical())

    def test_round_trip(self):
        original = StandardParams(sigma=16.0, rayleigh=45.92, b=4.0)
        back = params_denormalize(params_normalize(original))
        assert back.sigma == pytest.approx(original.sigma, rel=1e-12)
        assert back.rayleigh == pytest.approx(original.rayleigh, rel=1e-12)
        assert back.b == pytest.approx(original.b, rel=1e-12)

    @pytest.mark.parametrize("rayleigh", [1.0, 0.5, -3.0])
    def test_rayleigh_must_exceed_one(self, rayleigh):
        with pytest.raises(ParameterDomainError, match="r > 1"):
            params_normalize(StandardParams(rayleigh=rayleigh))

    def test_denormalize_gamma_out_of_range(self):
        with pytest.raises(ParameterDomainError, match="gamma"):
            params_denormalize(NormalizedParams(mu=0.7, beta=0.16, gamma=1.2))

    def test_denormalize_needs_positive_sigma(self):
        # 2*mu*(1-gamma) = 0.02 < beta
        with pytest.raises(ParameterDomainError, match="2\\*mu\\*\\(1-gamma\\) > beta"):
            params_denormalize(NormalizedParams(mu=0.1, beta=0.5, gamma=0.9))

    def test_invertible_flag(self):
        assert NormalizedParams.canonical().invertible
        assert not NormalizedParams(mu=0.1, beta=0.5, gamma=0.9).invertible


# ── States and time ───────────────────────────────────────────────────────────

class TestStateTransforms:
    def test_time_scale(self, standard_params):
        assert time_scale(standard_params) == pytest.approx(math.sqrt(270.0))
        assert time_denormalize(time_normalize(1.25, standard_params), standard_params) == pytest.approx(1.25)

    def test_round_trip(self, standard_params):
        S = CartesianState(-5.2, 3.1, 27.0)
        s, t = state_normalize(S, 0.4, standard_params)
        back, t_L = state_denormalize(s, t, standard_params)
        np.testing.assert_allclose(back.as_array(), S.as_array(), rtol=1e-13)
        assert t_L == pytest.approx(0.4, rel=1e-14)

    def test_equilibria_map_to_normalized_equilibria(self, standard_params):
        c = math.sqrt(standard_params.b * 27.0)
        s, _ = state_normalize(CartesianState(c, c, 27.0), 0.0, standard_params)
        np.testing.assert_allclose(s.as_array(), [1.0, 0.0, 13.0 / 15.0], atol=1e-14)

    def test_fields_are_conjugate(self, standard_params, rng):
        """d/dt of the normalized state equals the L2 field (chain rule, central differences)."""
        p2 = params_normalize(standard_params)
        scale = time_scale(standard_params)
        h = 1e-6
        for _ in range(50):
            S = CartesianState(*rng.uniform([-15, -20, 5], [15, 20, 40]))
            F = vf_standard(S, standard_params).as_array()
            plus, _ = state_normalize(CartesianState.from_array(S.as_array() + h * F), 0.0, standard_params)
            minus, _ = state_normalize(CartesianState.from_array(S.as_array() - h * F), 0.0, standard_params)
            fd = (plus.as_array() - minus.as_array()) / (2 * h) / scale
            s, _ = state_normalize(S, 0.0, standard_params)
            np.testing.assert_allclose(fd, vf_L2(s, p2).as_array(), rtol=1e-6, atol=1e-7)

    def test_rayleigh_guard(self):
        with pytest.raises(ParameterDomainError, match="r > 1"):
            state_normalize(CartesianState(1.0, 1.0, 1.0), 0.0, StandardParams(rayleigh=0.9))


class TestCoordinates:
    def test_polar_round_trip(self):
        s = CartesianState(-0.3, 0.8, 1.5)
        np.testing.assert_allclose(to_cartesian(to_polar(s)).as_array(), s.as_array(), atol=1e-15)

    def test_reduced_angle(self):
        p = PolarState(1.0, -0.5, 0.0).reduced()
        assert 0.0 <= p.angle < 2.0 * math.pi
        assert p.angle == pytest.approx(2.0 * math.pi - 0.5)

    def test_rotate_quarter_turn(self):
        r = rotate(CartesianState(1.0, 0.0, 2.0), math.pi / 2)
        np.testing.assert_allclose(r.as_array(), [0.0, 1.0, 2.0], atol=1e-15)

    def test_non_finite_state_rejected(self):
        with pytest.raises(ParameterDomainError):
            CartesianState(math.nan, 0.0, 0.0)

    def test_negative_radius_rejected(self):
        with pytest.raises(ParameterDomainError):
            PolarState(-1.0, 0.0, 0.0)


# ── SystemSpec and fixed points ───────────────────────────────────────────────

class TestSystemSpec:
    def test_defaults_filled_per_family(self):
        assert SystemSpec.standard().params == StandardParams.canonical()
        assert SystemSpec.ln(3).params == NormalizedParams.canonical()

    def test_fold_and_label(self):
        assert SystemSpec.l2().fold == 2 and SystemSpec.l2().label == "L2"
        assert SystemSpec.l1().fold == 1 and SystemSpec.l1().coords == CoordKind.polar
        assert SystemSpec.ln(5).label == "L5"
        assert SystemSpec.standard().fold is None

    def test_ln_requires_positive_n(self):
        with pytest.raises(ValidationError, match="n must be >= 1"):
            SystemSpec.ln(0)

    def test_params_type_checked(self):
        with pytest.raises(ValidationError, match="mu, beta, gamma"):
            SystemSpec(family=SystemFamily.l2, params=StandardParams())

    def test_json_round_trip(self):
        spec = SystemSpec.ln(4)
        assert SystemSpec.model_validate(spec.model_dump(mode="json")) == spec


class TestFixedPoints:
    def test_l2_three_points(self, normalized_params):
        states = [fp.state.as_array().tolist() for fp in fixed_points(SystemSpec.l2())]
        g = normalized_params.gamma
        assert states == [[0.0, 0.0, 0.0], [1.0, 0.0, g], [-1.0, 0.0, g]]

    def test_standard_points(self):
        points = fixed_points(SystemSpec.standard())
        assert len(points) == 3
        c = math.sqrt(8.0 / 3.0 * 27.0)
        np.testing.assert_allclose(points[1].state.as_array(), [c, c, 27.0])

    def test_standard_below_onset_has_origin_only(self):
        assert len(fixed_points(SystemSpec.standard(StandardParams(rayleigh=0.5)))) == 1

    def test_ln_points_and_degenerate_axis(self):
        points = fixed_points(SystemSpec.ln(3))
        assert len(points) == 4
        assert [fp.degenerate for fp in points] == [False, False, False, True]
        angles = [fp.state.angle for fp in points[:3]]
        np.testing.assert_allclose(angles, [0.0, 2 * math.pi / 3, 4 * math.pi / 3])
        assert all(fp.coords == CoordKind.polar for fp in points)
