"""Numerical time integration (fixed-step RK4, adaptive Dormand-Prince 5(4))."""

from lorenz_covering.integrate.models import IntegratorConfig, IntegratorMode, Trajectory
from lorenz_covering.integrate.solver import Integrator, flow, integrate, sample_grid, simulate
from lorenz_covering.integrate.systems import VectorField, as_vector_field, field_for, paired

__all__ = [
    "Integrator",
    "IntegratorConfig",
    "IntegratorMode",
    "Trajectory",
    "VectorField",
    "as_vector_field",
    "field_for",
    "flow",
    "integrate",
    "paired",
    "sample_grid",
    "simulate",
]
