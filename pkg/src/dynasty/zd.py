"""Zero compound discounting (beta = 1).

With Cobb-Douglas technology (theta < 1) the infinite-horizon contribution
path converges geometrically to ``log(A Theta) / (1 - theta)``, whose sign
decides whether the infinite-horizon value is +inf, finite or -inf. With
linear technology as well (theta = beta = 1) the value is available in
closed form for every horizon.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import InvalidParams, NonPositive
from .model import ZERO_TOL, ModelParams, log_a_theta


def _require_zd(params: ModelParams):
    if params.beta != 1.0 or not params.theta < 1.0:
        raise InvalidParams(f"ZD formulas need beta = 1 and theta < 1, got {params}")


def zd_plateau(params: ModelParams) -> float:
    """Limit of the infinite-horizon contribution as t grows."""
    _require_zd(params)
    return log_a_theta(params) / (1.0 - params.theta)


def zd_contribution_infinite(params: ModelParams, t):
    _require_zd(params)
    th = params.theta
    t = np.asarray(t, dtype=float)
    gap = th * math.log(params.k0) - th / (1.0 - th) * math.log(params.A * th)
    out = zd_plateau(params) + np.power(th, t) * gap
    return float(out) if out.ndim == 0 else out


def zd_value_infinite(params: ModelParams, tol: float = ZERO_TOL) -> float:
    """Sum of the infinite-horizon contributions: +inf, -inf, or the finite
    knife-edge value when ``A Theta = 1``."""
    _require_zd(params)
    lat = log_a_theta(params)
    if lat > tol:
        return math.inf
    if lat < -tol:
        return -math.inf
    th = params.theta
    return th / (1.0 - th) * math.log((1.0 - th) / th * params.k0)


def akzd_value(k0: float, n, A: float = 1.0):
    """Population value with theta = beta = 1.

    ``(n+1) log(k0/(n+1))`` for ``A = 1``; other ``A`` add ``n(n+1)/2 log A``
    from the geometric growth of consumption.
    """
    n = np.asarray(n, dtype=float)
    out = (n + 1.0) * np.log(A * k0 / (n + 1.0)) + 0.5 * n * (n + 1.0) * math.log(A)
    return float(out) if out.ndim == 0 else out


def akzd_optimal_horizon(k0: float) -> float:
    """Continuous maximizer ``k0/e - 1`` of :func:`akzd_value`."""
    if k0 <= 0:
        raise InvalidParams(f"k0 must be > 0, got {k0}")
    n = k0 / math.e - 1.0
    if k0 < math.e:
        raise NonPositive(f"k0={k0} < e: the value decreases from n = 0 on (n*={n:.6g})")
    return n
