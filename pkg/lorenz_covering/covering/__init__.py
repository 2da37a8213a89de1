"""N-fold coverings of the plane around the z-axis, coloring and lifting."""

from lorenz_covering.covering.cover import (
    TWO_PI,
    branch_preimages,
    color_array,
    color_of,
    colored,
    cover_point,
    cover_xy,
    deck_transform,
)
from lorenz_covering.covering.models import COLOR_CONVENTION, ColoredPoint, CoveringSpec
from lorenz_covering.covering.paths import (
    cover_trajectory,
    factor_trajectory,
    lift_trajectory,
    transfer_trajectory,
)

__all__ = [
    "COLOR_CONVENTION",
    "ColoredPoint",
    "CoveringSpec",
    "TWO_PI",
    "branch_preimages",
    "color_array",
    "color_of",
    "colored",
    "cover_point",
    "cover_trajectory",
    "cover_xy",
    "deck_transform",
    "factor_trajectory",
    "lift_trajectory",
    "transfer_trajectory",
]
