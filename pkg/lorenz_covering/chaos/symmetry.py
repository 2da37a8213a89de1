"""Rotational-symmetry defect of a planar point cloud."""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import ConvexHull, QhullError, cKDTree
from scipy.spatial.distance import pdist

from lorenz_covering.errors import ParameterDomainError


def cloud_diameter(points_xy: np.ndarray) -> float:
    """Largest pairwise distance, taken over the convex hull vertices."""
    pts = np.asarray(points_xy, dtype=float)
    if len(pts) < 2:
        return 0.0
    try:
        pts = pts[ConvexHull(pts).vertices]
    except QhullError:
        # Degenerate (collinear) clouds have no 2-D hull; fall back to all points.
        pass
    return float(pdist(pts).max())


def symmetry_defect(points_xy: np.ndarray, n: int) -> float:
    """
    Mean nearest-neighbour distance between the cloud and its copy rotated by
    2*pi/n, divided by the cloud diameter. Zero for an exactly Z_n-symmetric
    cloud.
    """
    if n < 1:
        raise ParameterDomainError(f"fold count n must be >= 1, got n={n}")
    pts = np.asarray(points_xy, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
        raise ParameterDomainError("symmetry_defect needs an (N, 2) array with N >= 2")
    c, s = math.cos(2.0 * math.pi / n), math.sin(2.0 * math.pi / n)
    rotated = pts @ np.array([[c, s], [-s, c]])
    dist, _ = cKDTree(pts).query(rotated)
    diameter = cloud_diameter(pts)
    return float(dist.mean() / diameter) if diameter > 0.0 else 0.0
