"""Resolution of a SystemSpec into an integrable VectorField."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np

from lorenz_covering.dynamics.fields import l1_polar_rhs, l2_rhs, ln_polar_rhs, standard_rhs
from lorenz_covering.dynamics.models import (
    RADIUS_MIN,
    CartesianState,
    CoordKind,
    PolarState,
    SystemFamily,
    SystemSpec,
)
from lorenz_covering.dynamics.transforms import to_cartesian, to_polar

Rhs = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class VectorField:
    """An autonomous field on flat numpy arrays plus its domain guard."""
    rhs: Rhs
    coords: CoordKind = CoordKind.cartesian
    label: str = "field"
    dim: int = 3
    # Components that must stay >= radius_min (the polar radius).
    radius_indices: tuple[int, ...] = ()
    radius_min: float = RADIUS_MIN
    # Unwrapped angles: tolerance is not scaled by their (growing) magnitude.
    periodic_indices: tuple[int, ...] = ()

    def __call__(self, u: np.ndarray) -> np.ndarray:
        return self.rhs(u)


def field_for(spec: SystemSpec) -> VectorField:
    """Kernel of each family in its canonical coordinates."""
    p = spec.params
    if spec.family == SystemFamily.standard:
        return VectorField(
            rhs=partial(standard_rhs, sigma=p.sigma, rayleigh=p.rayleigh, b=p.b),
            label="standard",
        )
    if spec.family == SystemFamily.l2:
        return VectorField(
            rhs=partial(l2_rhs, mu=p.mu, beta=p.beta, gamma=p.gamma),
            label="L2",
        )
    if spec.fold == 1:
        rhs = partial(l1_polar_rhs, mu=p.mu, beta=p.beta, gamma=p.gamma)
    else:
        rhs = partial(ln_polar_rhs, mu=p.mu, beta=p.beta, gamma=p.gamma, n=spec.fold)
    return VectorField(
        rhs=rhs,
        coords=CoordKind.polar,
        label=spec.label,
        radius_indices=(0,),
        periodic_indices=(1,),
    )


def paired(vf: VectorField) -> VectorField:
    """Two copies of `vf` side by side (principal + companion trajectory)."""
    d = vf.dim

    def rhs(u: np.ndarray) -> np.ndarray:
        return np.concatenate([vf.rhs(u[:d]), vf.rhs(u[d:])])

    return VectorField(
        rhs=rhs,
        coords=vf.coords,
        label=f"{vf.label} (paired)",
        dim=2 * d,
        radius_indices=vf.radius_indices + tuple(i + d for i in vf.radius_indices),
        radius_min=vf.radius_min,
        periodic_indices=vf.periodic_indices + tuple(i + d for i in vf.periodic_indices),
    )


def as_vector_field(field: VectorField | SystemSpec | Rhs) -> VectorField:
    if isinstance(field, VectorField):
        return field
    if isinstance(field, SystemSpec):
        return field_for(field)
    if callable(field):
        return VectorField(rhs=lambda u: np.asarray(field(u), dtype=float), label="custom")
    raise TypeError(f"cannot integrate {type(field).__name__}")


def state_array(s0, coords: CoordKind) -> np.ndarray:
    """Initial state as an array in the field's coordinates."""
    if isinstance(s0, CartesianState):
        s0 = to_polar(s0) if coords == CoordKind.polar else s0
    elif isinstance(s0, PolarState):
        s0 = to_cartesian(s0) if coords == CoordKind.cartesian else s0
    if isinstance(s0, (CartesianState, PolarState)):
        return s0.as_array()
    return np.array(s0, dtype=float).ravel()
