"""Minimal delta-separated clustering of points in the plane."""

import numpy as np

from ._deltaclust import (
    Cancelled,
    __version__,
    cluster as _cluster,
    components_refine,
    delaunay_edges,
    gen_circles,
    gen_squares,
    harmonic_mean,
    incircle,
    is_admissible,
    oracle_components as _oracle_components,
    orient2d,
    scaling_exponent,
)


def as_points(values):
    """Accept complex numbers or an (n, 2) array and return an (n, 2) float array."""
    arr = np.asarray(values)
    if np.iscomplexobj(arr) or arr.ndim == 1:
        arr = np.asarray(arr, dtype=complex).ravel()
        return np.column_stack([arr.real, arr.imag])
    return np.asarray(arr, dtype=float)


def cluster(points, delta=0.1, **kwargs):
    return _cluster(as_points(points), delta, **kwargs)


def oracle_components(points, delta):
    return _oracle_components(as_points(points), delta)


__all__ = [
    "Cancelled",
    "__version__",
    "as_points",
    "cluster",
    "components_refine",
    "delaunay_edges",
    "gen_circles",
    "gen_squares",
    "harmonic_mean",
    "incircle",
    "is_admissible",
    "oracle_components",
    "orient2d",
    "scaling_exponent",
]
