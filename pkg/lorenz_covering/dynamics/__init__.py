"""
Dynamics: parameter/state types, the four vector-field families, the
standard <-> normalized change of variables and closed-form equilibria.

Public API:
    from lorenz_covering.dynamics import vf_L2, vf_Ln_polar, params_normalize, fixed_points
"""

from lorenz_covering.dynamics.fields import (
    vf_L1_polar,
    vf_L2,
    vf_Ln_cartesian,
    vf_Ln_polar,
    vf_standard,
)
from lorenz_covering.dynamics.fixed_points import fixed_points
from lorenz_covering.dynamics.models import (
    RADIUS_MIN,
    CartesianState,
    CoordKind,
    FixedPoint,
    NormalizedParams,
    PolarDerivative,
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

__all__ = [
    "RADIUS_MIN",
    "CartesianState",
    "CoordKind",
    "FixedPoint",
    "NormalizedParams",
    "PolarDerivative",
    "PolarState",
    "StandardParams",
    "SystemFamily",
    "SystemSpec",
    "fixed_points",
    "params_denormalize",
    "params_normalize",
    "rotate",
    "state_denormalize",
    "state_normalize",
    "time_denormalize",
    "time_normalize",
    "time_scale",
    "to_cartesian",
    "to_polar",
    "vf_L1_polar",
    "vf_L2",
    "vf_Ln_cartesian",
    "vf_Ln_polar",
    "vf_standard",
]
