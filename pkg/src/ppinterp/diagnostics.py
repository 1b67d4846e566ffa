"""Error norms and mesh utilities used by the experiment harness."""

from __future__ import annotations

import numpy as np

from .divdiff import as_mesh1d

__all__ = [
    "l2_error_continuum",
    "l2_error_continuum_2d",
    "l2_error_grid",
    "refine_mesh",
]


def l2_error_continuum(approx_values, exact_values, mesh) -> float:
    """Trapezoidal-rule approximation of the continuous L2 difference norm.

    ``mesh`` is the dense sampling grid the two value sequences live on.
    """
    a = np.asarray(approx_values, dtype=float)
    b = np.asarray(exact_values, dtype=float)
    x = as_mesh1d(mesh)
    if a.shape != x.shape or b.shape != x.shape:
        raise ValueError("value sequences must match the sampling mesh length")
    return float(np.sqrt(np.trapezoid((a - b) ** 2, x)))


def l2_error_continuum_2d(approx_values, exact_values, xs, ys) -> float:
    """2D variant: the trapezoidal rule iterated per axis (y, then x)."""
    a = np.asarray(approx_values, dtype=float)
    b = np.asarray(exact_values, dtype=float)
    gx, gy = as_mesh1d(xs), as_mesh1d(ys)
    if a.shape != (gx.size, gy.size) or b.shape != a.shape:
        raise ValueError("value grids must match the sampling meshes")
    inner = np.trapezoid((a - b) ** 2, gy, axis=1)
    return float(np.sqrt(np.trapezoid(inner, gx)))


def l2_error_grid(a, b) -> float:
    """Root-mean-square difference over grid points.

    The mean (rather than plain sum) keeps values comparable across grid
    resolutions.
    """
    av = np.asarray(a, dtype=float)
    bv = np.asarray(b, dtype=float)
    if av.shape != bv.shape:
        raise ValueError(f"length mismatch: {av.shape} vs {bv.shape}")
    return float(np.sqrt(np.mean((av - bv) ** 2)))


def refine_mesh(mesh, k: int) -> np.ndarray:
    """Insert ``k`` equally spaced interior points in every interval.

    Original points are preserved exactly; N points become N + k(N-1).
    """
    x = as_mesh1d(mesh)
    if k < 0 or int(k) != k:
        raise ValueError(f"k must be a nonnegative integer, got {k}")
    if k == 0:
        return x.copy()
    n = x.size
    out = np.empty(n + k * (n - 1))
    out[:: k + 1] = x
    delta = np.diff(x)
    for m in range(1, k + 1):
        out[m :: k + 1] = x[:-1] + delta * (m / (k + 1))
    return out
