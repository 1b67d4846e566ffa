"""Newton divided differences: table construction, per-interval interpolants,
and nested (Horner-like) evaluation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "as_mesh1d",
    "DividedDifferenceTable",
    "build_table",
    "IntervalInterpolant",
    "newton_eval",
    "estimate_local_error",
]


def as_mesh1d(points) -> np.ndarray:
    """Validate and return a 1D mesh as a float array.

    The mesh must hold at least two strictly increasing coordinates.
    """
    x = np.asarray(points, dtype=float)
    if x.ndim != 1:
        raise ValueError(f"mesh must be one-dimensional, got shape {x.shape}")
    if x.size < 2:
        raise ValueError(f"mesh needs at least 2 points, got {x.size}")
    if not np.all(np.diff(x) > 0.0):
        raise ValueError("mesh coordinates must be strictly increasing")
    return x


@dataclass(frozen=True)
class DividedDifferenceTable:
    """Dense table of divided differences over one mesh/value pair.

    ``entries[i, j]`` holds the order-j divided difference of the values over
    mesh points i..i+j.  Entries with i + j >= n_points do not exist and are
    stored as NaN so that accidental reads surface loudly.
    """

    entries: np.ndarray
    n_points: int
    max_order: int

    def dd(self, i: int, order: int) -> float:
        """Divided difference over mesh points i..i+order."""
        if order > self.max_order or i + order >= self.n_points:
            raise IndexError(f"no divided difference of order {order} at row {i}")
        return float(self.entries[i, order])


def build_table(mesh, values, max_degree: int) -> DividedDifferenceTable:
    """Build all divided differences of order 0..min(max_degree, n-1).

    ``max_degree`` is the highest difference order retained; the driver asks
    for one order beyond the target polynomial degree so the local error
    estimate has the next difference available.
    """
    x = as_mesh1d(mesh)
    u = np.asarray(values, dtype=float)
    if u.shape != x.shape:
        raise ValueError(f"values length {u.shape} does not match mesh length {x.shape}")
    if max_degree < 1:
        raise ValueError(f"max_degree must be >= 1, got {max_degree}")

    n = x.size
    top = min(max_degree, n - 1)
    t = np.full((n, top + 1), np.nan)
    t[:, 0] = u
    for j in range(1, top + 1):
        t[: n - j, j] = (t[1 : n - j + 1, j - 1] - t[: n - j, j - 1]) / (x[j:] - x[: n - j])
    return DividedDifferenceTable(entries=t, n_points=n, max_order=top)


@dataclass(frozen=True)
class IntervalInterpolant:
    """Newton-form interpolant for one mesh interval [x_i, x_{i+1}].

    ``window`` is the inclusive (l, r) mesh-index span of the stencil and
    ``insertion_order`` records how the stencil grew, starting (i, i+1).
    ``coefficients[j]`` is the divided difference of the window after j
    insertions, so evaluation nests the products over ``insertion_order``.

    ``normalization`` / ``denom`` / ``m_l`` / ``m_r`` record how the stencil
    growth was normalized and bounded, so an accepted stencil can be replayed
    and re-checked after the fact.
    """

    interval_index: int
    window: tuple[int, int]
    insertion_order: tuple[int, ...]
    coefficients: tuple[float, ...]
    normalization: str = "standard"  # "standard" (slope) or "degenerate" (w)
    denom: float = field(default=np.nan)
    m_l: float = 0.0
    m_r: float = 1.0

    @property
    def degree(self) -> int:
        return self.window[1] - self.window[0]

    def __post_init__(self):
        l, r = self.window
        i = self.interval_index
        if not (l <= i < i + 1 <= r):
            raise ValueError(f"window {self.window} does not contain interval {i}")
        if len(self.insertion_order) != r - l + 1 or len(self.coefficients) != r - l + 1:
            raise ValueError("insertion order / coefficients must cover the window")
        if self.insertion_order[0] != i or self.insertion_order[1] != i + 1:
            raise ValueError("insertion order must start with (i, i+1)")
        if sorted(self.insertion_order) != list(range(l, r + 1)):
            raise ValueError("insertion order must be a permutation of the window")


def newton_eval(piece: IntervalInterpolant, mesh, x):
    """Evaluate the Newton-form interpolant at ``x`` (scalar or array).

    Nested multiplication over the insertion order: the result is
    c_0 + (x - x_e0)(c_1 + (x - x_e1)(c_2 + ...)).
    """
    xs = np.asarray(mesh, dtype=float)
    xv = np.asarray(x, dtype=float)
    scalar = xv.ndim == 0
    xv = np.atleast_1d(xv)
    coeffs = piece.coefficients
    nodes = piece.insertion_order
    p = np.full(xv.shape, coeffs[-1])
    for j in range(len(coeffs) - 2, -1, -1):
        p = coeffs[j] + (xv - xs[nodes[j]]) * p
    return float(p[0]) if scalar else p


def estimate_local_error(piece: IntervalInterpolant, table: DividedDifferenceTable, mesh):
    """Approximate the local interpolation error of ``piece``.

    Uses the next-order divided difference (window extended by one point,
    preferring the right neighbor) times the product over the stencil nodes of
    max(|x_i - x_e|, |x_{i+1} - x_e|).  Returns None when the table holds no
    difference one order beyond the piece or the window spans the whole mesh.
    """
    x = np.asarray(mesh, dtype=float)
    l, r = piece.window
    order = piece.degree + 1
    if order > table.max_order:
        return None
    if r + 1 < table.n_points:
        nxt = table.entries[l, order]
    elif l - 1 >= 0:
        nxt = table.entries[l - 1, order]
    else:
        return None

    i = piece.interval_index
    prod = 1.0
    for e in piece.insertion_order:
        prod *= max(abs(x[i] - x[e]), abs(x[i + 1] - x[e]))
    return float(nxt) * prod
