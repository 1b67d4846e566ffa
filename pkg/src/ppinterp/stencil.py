"""Adaptive stencil construction for one interval.

Grows the two-point base stencil one mesh point at a time.  A candidate point
is admissible when the ratio of scaled divided differences (lambda_bar) stays
inside recursively tightened bounds (B-, B+); when both neighbors are
admissible a user-selectable policy (st) picks the side."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import IntervalBounds, scaling_factors
from .config import InterpConfig
from .divdiff import DividedDifferenceTable, IntervalInterpolant

__all__ = [
    "LEFT",
    "RIGHT",
    "StencilState",
    "geometry_factors",
    "lambda_bar_candidate",
    "b_bounds_step",
    "select_direction",
    "build_stencil",
    "replay_chain",
]

LEFT = "left"
RIGHT = "right"


@dataclass
class StencilState:
    """Running state while growing the stencil of interval ``i``.

    ``j`` counts expansions (window size is j + 2).  ``lambda_bar`` is the
    scaled divided-difference ratio of the current window, ``length_product``
    the accumulated product of window lengths entering it.  ``denom`` is the
    interval slope, or the scaled first nonzero difference (w) when the
    endpoint values are equal (``normalization == "degenerate"``).
    """

    i: int
    l: int
    r: int
    j: int = 0
    lambda_bar: float = 1.0
    b_minus: float = np.nan
    b_plus: float = np.nan
    length_product: float = 1.0
    normalization: str = "standard"
    denom: float = np.nan
    insertion_order: list[int] = field(default_factory=list)
    coefficients: list[float] = field(default_factory=list)

    @property
    def mu_l(self) -> int:
        return self.i - self.l

    @property
    def mu_r(self) -> int:
        return self.r - (self.i + 1)


def geometry_factors(mesh, i: int, window: tuple[int, int], inserted: int) -> tuple[float, float]:
    """Return (t, d) for one insertion, normalized by the base interval.

    ``t`` locates the inserted point relative to [x_i, x_{i+1}] (t <= 0 left
    of the interval, t >= 1 right of it); ``d`` is the expanded window length
    over the base interval length.  Note the admissibility recursion at step
    j consumes the t of the point inserted at step j-1 together with the d of
    the window after step j.
    """
    x = np.asarray(mesh, dtype=float)
    h = x[i + 1] - x[i]
    l, r = window
    return float((x[inserted] - x[i]) / h), float((x[r] - x[l]) / h)


def lambda_bar_candidate(
    table: DividedDifferenceTable, mesh, state: StencilState, direction: str
):
    """Lambda_bar of the window expanded one point in ``direction``.

    Returns None when the mesh ends on that side.  The value is the expanded
    window's divided difference over ``state.denom``, scaled by the product of
    window lengths accumulated so far and the new window length.
    """
    x = np.asarray(mesh, dtype=float)
    if direction == LEFT:
        e = state.l - 1
        if e < 0:
            return None
        new_l, new_r = e, state.r
    else:
        e = state.r + 1
        if e > table.n_points - 1:
            return None
        new_l, new_r = state.l, e
    dd = table.entries[new_l, new_r - new_l]
    length = x[new_r] - x[new_l]
    return float(dd / state.denom * state.length_product * length)


def b_bounds_step(
    prev: tuple[float, float] | None,
    lambda_bar_prev: float,
    d_j: float,
    t_j: float,
    m_l: float,
    m_r: float,
    j: int,
    degenerate_base: bool = False,
) -> tuple[float, float]:
    """One step of the recursive admissibility bounds on lambda_bar.

    j = 1 seeds the recursion from (m_l, m_r); later steps propagate the
    previous bounds through the geometry factors, swapping sides when the
    inserted point lies to the right (t_j > 0).

    With equal endpoint values the interpolant has no linear term, so the
    quadratic shape s(s-1)*lambda_1/d_1 alone must fit between m_l and m_r;
    since s(s-1) spans [-1/4, 0] the seed tightens to (-4*m_r*d_1,
    -4*m_l*d_1).  ``degenerate_base`` selects that seed.
    """
    if j == 1:
        if degenerate_base:
            return -4.0 * m_r * d_j, -4.0 * m_l * d_j
        return (-4.0 * (m_r - 1.0) - 1.0) * d_j, (-4.0 * m_l + 1.0) * d_j
    if prev is None:
        raise ValueError("steps with j > 1 require the previous bounds")
    bm, bp = prev
    if t_j <= 0.0:
        f = d_j / (1.0 - t_j)
        return (bm - lambda_bar_prev) * f, (bp - lambda_bar_prev) * f
    f = d_j / (-t_j)
    return (bp - lambda_bar_prev) * f, (bm - lambda_bar_prev) * f


def select_direction(
    st: int,
    left_ok: bool,
    right_ok: bool,
    dd_left: float,
    dd_right: float,
    mu_l: int,
    mu_r: int,
    dist_left: float,
    dist_right: float,
    lb_left: float,
    lb_right: float,
) -> str:
    """Pick the expansion side; both-admissible cases follow the st policy.

    st=1 prefers the smaller divided-difference magnitude, st=2 the side that
    keeps the stencil symmetric, st=3 the closer point.  Exact ties fall back
    to the smaller |lambda_bar| (the right side wins equality).
    """
    if not (left_ok or right_ok):
        raise ValueError("at least one direction must be admissible")
    if not right_ok:
        return LEFT
    if not left_ok:
        return RIGHT
    if st == 1:
        a, b = abs(dd_left), abs(dd_right)
    elif st == 2:
        a, b = mu_l, mu_r
    elif st == 3:
        a, b = dist_left, dist_right
    else:
        raise ValueError(f"st must be 1, 2 or 3, got {st}")
    if a < b:
        return LEFT
    if a > b:
        return RIGHT
    return RIGHT if abs(lb_left) >= abs(lb_right) else LEFT


def _linear_piece(table: DividedDifferenceTable, i: int) -> IntervalInterpolant:
    return IntervalInterpolant(
        interval_index=i,
        window=(i, i + 1),
        insertion_order=(i, i + 1),
        coefficients=(float(table.entries[i, 0]), float(table.entries[i, 1])),
        normalization="standard",
        denom=float(table.entries[i, 1]),
    )


def _candidate(table, x, state, direction, m_l, m_r, h):
    """Evaluate one expansion candidate; returns None if the mesh ends.

    The bounds step pairs the candidate window's d with the t of the point
    added one step earlier (the factor multiplying lambda_j in the nested
    form), which is the last entry of the insertion order.
    """
    lam = lambda_bar_candidate(table, x, state, direction)
    if lam is None:
        return None
    e = state.l - 1 if direction == LEFT else state.r + 1
    new_l = min(state.l, e)
    new_r = max(state.r, e)
    t = (x[state.insertion_order[-1]] - x[state.i]) / h
    d = (x[new_r] - x[new_l]) / h
    j_new = state.j + 1
    prev = None if j_new == 1 else (state.b_minus, state.b_plus)
    bm, bp = b_bounds_step(
        prev, state.lambda_bar, d, t, m_l, m_r, j_new,
        degenerate_base=state.normalization == "degenerate",
    )
    return {
        "e": e,
        "window": (new_l, new_r),
        "lam": lam,
        "bounds": (bm, bp),
        "ok": bm <= lam <= bp,
        "dd": float(table.entries[new_l, new_r - new_l]),
        "length": float(x[new_r] - x[new_l]),
    }


def _accept(state: StencilState, cand: dict) -> None:
    state.l, state.r = cand["window"]
    state.j += 1
    state.lambda_bar = cand["lam"]
    state.b_minus, state.b_plus = cand["bounds"]
    state.length_product *= cand["length"]
    state.insertion_order.append(cand["e"])
    state.coefficients.append(cand["dd"])


def build_stencil(
    mesh,
    table: DividedDifferenceTable,
    i: int,
    bounds: IntervalBounds,
    config: InterpConfig,
) -> IntervalInterpolant:
    """Grow the stencil for interval ``i`` and return its interpolant.

    Expansion stops when neither neighbor is admissible, the window holds
    d+1 points, or the mesh ends on both sides.  Equal endpoint values switch
    the normalization to the first expanded window's scaled difference (w);
    if that window is flat too, the interval falls back to the linear piece.
    """
    x = np.asarray(mesh, dtype=float)
    n = table.n_points
    if not 0 <= i < n - 1:
        raise ValueError(f"interval index {i} out of range for {n} mesh points")
    d = config.d
    if table.max_order < min(d, n - 1):
        raise ValueError("divided-difference table holds too few orders for degree d")

    u_i = float(table.entries[i, 0])
    u_ip1 = float(table.entries[i + 1, 0])
    sigma = float(table.entries[i, 1])
    h = float(x[i + 1] - x[i])

    state = StencilState(
        i=i,
        l=i,
        r=i + 1,
        denom=sigma,
        insertion_order=[i, i + 1],
        coefficients=[u_i, sigma],
    )

    if bounds.degenerate:
        # Equal endpoint values: the slope normalization is unusable.  Pick
        # the first expansion by divided-difference magnitude (ties go right),
        # derive w from that window, then continue the regular recursion.
        if d < 2:
            return _linear_piece(table, i)
        left_dd = abs(float(table.entries[i - 1, 2])) if i - 1 >= 0 else None
        right_dd = abs(float(table.entries[i, 2])) if i + 2 <= n - 1 else None
        if left_dd is None and right_dd is None:
            return _linear_piece(table, i)
        if right_dd is None or (left_dd is not None and left_dd < right_dd):
            l1, r1, e1 = i - 1, i + 1, i - 1
        else:
            l1, r1, e1 = i, i + 2, i + 2
        w = float(table.entries[l1, 2]) * h * (x[r1] - x[l1])
        if w == 0.0:
            # Flat beyond the interval as well: fall back to the linear piece.
            return _linear_piece(table, i)
        m_l, m_r = scaling_factors(u_i, u_ip1, bounds.u_min, bounds.u_max, config.im, w)
        state.normalization = "degenerate"
        state.denom = w
        state.length_product = h
        cand = _candidate(table, x, state, LEFT if e1 < i else RIGHT, m_l, m_r, h)
        if not cand["ok"]:
            return _linear_piece(table, i)
        _accept(state, cand)
    else:
        m_l, m_r = bounds.m_l, bounds.m_r

    while state.r - state.l < d and (state.l > 0 or state.r < n - 1):
        cl = _candidate(table, x, state, LEFT, m_l, m_r, h)
        cr = _candidate(table, x, state, RIGHT, m_l, m_r, h)
        left_ok = cl is not None and cl["ok"]
        right_ok = cr is not None and cr["ok"]
        if not (left_ok or right_ok):
            break
        if left_ok and right_ok:
            side = select_direction(
                config.st,
                True,
                True,
                cl["dd"],
                cr["dd"],
                state.mu_l,
                state.mu_r,
                float(abs(x[state.l - 1] - x[i])),
                float(abs(x[state.r + 1] - x[i + 1])),
                cl["lam"],
                cr["lam"],
            )
        else:
            side = LEFT if left_ok else RIGHT
        _accept(state, cl if side == LEFT else cr)

    return IntervalInterpolant(
        interval_index=i,
        window=(state.l, state.r),
        insertion_order=tuple(state.insertion_order),
        coefficients=tuple(state.coefficients),
        normalization=state.normalization,
        denom=state.denom,
        m_l=m_l,
        m_r=m_r,
    )


def replay_chain(piece: IntervalInterpolant, table: DividedDifferenceTable, mesh):
    """Recompute (lambda_bar_j, B-_j, B+_j) along an accepted stencil.

    Returns one (j, lambda_bar, b_minus, b_plus) tuple per expansion, built
    from scratch off the recorded insertion order, normalization and scaling
    factors; every accepted step must satisfy B- <= lambda_bar <= B+.
    """
    x = np.asarray(mesh, dtype=float)
    i = piece.interval_index
    h = float(x[i + 1] - x[i])
    order = piece.insertion_order
    chain = []
    l, r = i, i + 1
    length_product = h if piece.normalization == "degenerate" else 1.0
    prev = None
    lam_prev = 1.0
    for j in range(1, len(order) - 1):
        e = order[j + 1]
        l, r = min(l, e), max(r, e)
        dd = float(table.entries[l, r - l])
        length = float(x[r] - x[l])
        length_product *= length
        lam = dd / piece.denom * length_product
        t = float((x[order[j]] - x[i]) / h)
        d = float((x[r] - x[l]) / h)
        bm, bp = b_bounds_step(
            prev, lam_prev, d, t, piece.m_l, piece.m_r, j,
            degenerate_base=piece.normalization == "degenerate",
        )
        chain.append((j, lam, bm, bp))
        prev = (bm, bp)
        lam_prev = lam
    return chain
