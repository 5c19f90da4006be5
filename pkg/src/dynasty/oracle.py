"""Brute-force solutions of the horizon-``n`` problem.

Nothing here uses the closed-form policy. :func:`brute_force_value` runs
grid backward induction on the Bellman recursion; :func:`direct_search`
maximizes the objective over whole consumption vectors for tiny horizons.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import GridEscape, InfeasibleBox
from .model import ModelParams
from .numerics import golden_max


@dataclass(frozen=True)
class GridSpec:
    k_min: float
    k_max: float
    m: int
    log_spaced: bool = True

    def nodes(self) -> np.ndarray:
        if self.log_spaced:
            return np.geomspace(self.k_min, self.k_max, self.m)
        return np.linspace(self.k_min, self.k_max, self.m)


@dataclass(frozen=True)
class OracleResult:
    value: float
    c0: float
    policy: list = field(repr=False)
    grid: GridSpec | None = None
    refinement_level: int = 0
    path: np.ndarray | None = field(default=None, repr=False)
    error_estimate: float = 0.0


def default_grid(params: ModelParams, n: int, m: int) -> GridSpec:
    p = params
    top = p.k0 * max(1.0, (p.A * p.beta * p.theta) ** n) * 10.0
    return GridSpec(p.k0 * 1e-6, top, m)


class _StageValue:
    """Monotone cubic interpolant of ``V_{t+1}`` on (log k, V)."""

    def __init__(self, k, v):
        ok = np.isfinite(v)
        self.k_lo, self.k_hi = k[ok][0], k[ok][-1]
        self._f = PchipInterpolator(np.log(k[ok]), v[ok], extrapolate=False)

    def __call__(self, k):
        return self._f(np.log(k))


def _stage_max(params: ModelParams, k, nxt: _StageValue, iters: int):
    """Best consumption at each capital level ``k`` given next-stage values."""
    p = params
    y = p.A * np.power(k, p.theta)
    lo = np.maximum(1e-12 * y, y - nxt.k_hi)
    hi = y - nxt.k_lo
    feasible = hi > lo
    lo_f, hi_f, y_f = lo[feasible], hi[feasible], y[feasible]

    def objective(c):
        return np.log(c) + p.beta * nxt(np.clip(y_f - c, nxt.k_lo, nxt.k_hi))

    c = np.full(k.shape, np.nan)
    v = np.full(k.shape, -np.inf)
    if lo_f.size:
        c_f, v_f = golden_max(objective, lo_f, hi_f, iters=iters)
        c[feasible], v[feasible] = c_f, v_f
    return c, v


def brute_force_value(
    params: ModelParams,
    n: int,
    grid_points: int = 800,
    grid: GridSpec | None = None,
    iters: int = 90,
    estimate_error: bool = False,
) -> OracleResult:
    """Value of the horizon-``n`` problem at ``k0`` by backward induction.

    The terminal stage eats its output; earlier stages maximize
    ``log c + beta V_{t+1}(A k**theta - c)`` by golden-section search with
    ``V_{t+1}`` interpolated on a log-spaced capital grid.
    """
    p = params
    if not 0 <= n <= 8:
        raise ValueError(f"brute force is limited to n <= 8, got {n}")
    if grid_points < 200:
        raise ValueError(f"grid_points must be >= 200, got {grid_points}")
    grid = grid or default_grid(p, n, grid_points)
    if not grid.k_min <= p.k0 <= grid.k_max:
        raise GridEscape(f"k0={p.k0} outside grid [{grid.k_min}, {grid.k_max}]")
    y0 = p.A * p.k0**p.theta
    if n == 0:
        return OracleResult(math.log(y0), y0, [], grid, 0, np.array([p.k0]))

    k = grid.nodes()
    v = math.log(p.A) + p.theta * np.log(k)  # terminal stage
    stages = [None] * (n + 1)
    policy = [None] * n
    stages[n] = _StageValue(k, v)
    for t in range(n - 1, 0, -1):
        policy[t], v = _stage_max(p, k, stages[t + 1], iters)
        stages[t] = _StageValue(k, v)

    # forward pass from k0, re-optimizing at the realized states
    path = [p.k0]
    c0 = value = None
    for t in range(n):
        kt = np.array([path[-1]])
        c, vt = _stage_max(p, kt, stages[t + 1], iters)
        if not np.isfinite(vt[0]):
            raise GridEscape(f"no feasible consumption at k[{t}]={kt[0]:.6g}")
        if t == 0:
            c0, value = float(c[0]), float(vt[0])
        k_next = p.A * kt[0] ** p.theta - c[0]
        nxt = stages[t + 1]
        if np.isclose(k_next, nxt.k_lo, rtol=1e-9) or np.isclose(k_next, nxt.k_hi, rtol=1e-9):
            raise GridEscape(f"k[{t + 1}]={k_next:.6g} pinned to the grid edge; widen the bounds")
        path.append(k_next)
    policy[0] = np.array([c0])

    err = 0.0
    if estimate_error:
        coarse = brute_force_value(p, n, max(200, grid_points // 2), iters=iters)
        err = abs(coarse.value - value)
    level = int(round(math.log2(grid_points / 200)))
    return OracleResult(value, c0, policy, grid, level, np.array(path), err)


def _objective(params: ModelParams, cs: np.ndarray) -> np.ndarray:
    """Value of consumption plans ``cs`` (rows: plans, cols: c_0..c_{n-1}),
    with the last generation taking the remaining output; -inf if infeasible."""
    p = params
    k = np.full(cs.shape[0], p.k0)
    total = np.zeros(cs.shape[0])
    ok = np.ones(cs.shape[0], dtype=bool)
    with np.errstate(invalid="ignore", divide="ignore"):
        for t in range(cs.shape[1]):
            c = cs[:, t]
            k = p.A * np.power(k, p.theta) - c
            ok &= (c > 0) & (k > 0)
            total += p.beta**t * np.log(np.where(ok, c, 1.0))
            k = np.where(ok, k, 1.0)
        total += p.beta ** cs.shape[1] * np.log(p.A * np.power(k, p.theta))
    return np.where(ok, total, -np.inf)


def direct_search(
    params: ModelParams,
    n: int,
    refinement_rounds: int = 8,
    samples: int = 25,
    shrink: float = 5.0,
) -> OracleResult:
    """Tensor-grid search over ``(c_0, ..., c_{n-1})`` with zooming.

    Each round samples ``samples`` points per coordinate inside the current
    box and shrinks every side by ``shrink`` around the incumbent.
    """
    p = params
    if not 0 <= n <= 3:
        raise ValueError(f"direct search is limited to n <= 3, got {n}")
    y0 = p.A * p.k0**p.theta
    if n == 0:
        return OracleResult(math.log(y0), y0, [np.array([y0])], refinement_level=0)
    # largest output reachable at each stage (nothing consumed before it)
    caps = [y0]
    for _ in range(n - 1):
        caps.append(p.A * caps[-1] ** p.theta)
    caps = np.array(caps)
    lo, hi = np.zeros(n), caps.copy()
    best_c, best_v = None, -np.inf
    for _ in range(refinement_rounds):
        axes = [np.linspace(lo[i], hi[i], samples) for i in range(n)]
        plans = np.array(list(itertools.product(*axes)))
        vals = _objective(p, plans)
        j = int(np.argmax(vals))
        if not np.isfinite(vals[j]):
            if best_c is None:
                raise InfeasibleBox("every sampled consumption plan is infeasible")
            break
        if vals[j] >= best_v:
            best_c, best_v = plans[j], float(vals[j])
        half = (hi - lo) / (2.0 * shrink)
        lo = np.clip(best_c - half, 0.0, caps)
        hi = np.clip(best_c + half, 0.0, caps)
    return OracleResult(best_v, float(best_c[0]), [best_c], refinement_level=refinement_rounds)
