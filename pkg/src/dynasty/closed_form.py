"""Optimal consumption and capital paths for a fixed planning horizon.

For horizon ``n`` (generations ``t = 0..n``) the optimal policy consumes the
share ``1 / S_{n-t}`` of output, ``c_t = A k_t**theta / S_{n-t}``, which drives
capital as

    log k_{t+1} = log(S_{n-t-1} / S_{n-t}) + log(A beta theta) + theta log k_t

and exhausts it at ``k_{n+1} = 0``. Everything here is evaluated in log space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from .errors import DegenerateLimit, NonPositive, UnderflowError
from .model import ModelParams, geometric_sum

LOG_FLOOR = -700.0


@dataclass(frozen=True)
class Trajectory:
    n: int
    c: np.ndarray        # c[0..n]
    k: np.ndarray        # k[0..n+1], k[n+1] == 0
    contrib: np.ndarray  # log c[t]
    value: float         # sum beta**t log c[t]

    @property
    def t(self) -> np.ndarray:
        return np.arange(self.n + 1)


def log_sum_ratio(ell, params: ModelParams):
    """``log(S_{ell-1} / S_ell)`` for ``ell >= 1``."""
    ell = np.asarray(ell, dtype=float)
    x = params.bt
    if x == 1.0:
        return -np.log1p(1.0 / ell)
    # S_{ell-1} / S_ell = 1 - x**ell / S_ell
    return np.log1p(-np.power(x, ell) / geometric_sum(ell, params))


def _log_capital(params: ModelParams, n: int) -> np.ndarray:
    """log k[0..n] along the optimal path."""
    if n == 0:
        return np.array([math.log(params.k0)])
    p = params
    ell = n - np.arange(n)  # S index for steps t = 0..n-1
    drift = log_sum_ratio(ell, p) + math.log(p.A * p.beta * p.theta)
    # y_t = drift_t + theta * y_{t-1}, seeded with log k0
    steps, _ = lfilter([1.0], [1.0, -p.theta], drift, zi=[p.theta * math.log(p.k0)])
    logk = np.concatenate(([math.log(p.k0)], steps))
    if logk.min() < LOG_FLOOR:
        t_bad = int(np.argmax(logk < LOG_FLOOR))
        raise UnderflowError(
            f"log k[{t_bad}] = {logk[t_bad]:.1f} underflows the log domain (n={n}, {params})"
        )
    return logk


def _check_horizon(n) -> int:
    if int(n) != n or n < 0:
        raise ValueError(f"horizon must be a nonnegative integer, got {n!r}")
    return int(n)


def optimal_capital_path(params: ModelParams, n: int) -> np.ndarray:
    n = _check_horizon(n)
    k = np.append(np.exp(_log_capital(params, n)), 0.0)
    k[0] = params.k0
    return k


def optimal_consumption_path(params: ModelParams, n: int) -> Trajectory:
    n = _check_horizon(n)
    p = params
    logk = _log_capital(p, n)
    log_s = np.log(geometric_sum(n - np.arange(n + 1), p))
    log_y = math.log(p.A) + p.theta * logk
    contrib = log_y - log_s
    # S_0 == 1, so the last generation eats the whole output
    contrib[-1] = log_y[-1]
    c = np.exp(contrib)
    k = np.append(np.exp(logk), 0.0)
    k[0] = p.k0
    value = float(np.dot(np.power(p.beta, np.arange(n + 1)), contrib))
    return Trajectory(n=n, c=c, k=k, contrib=contrib, value=value)


def population_value(params: ModelParams, n: int) -> float:
    return optimal_consumption_path(params, n).value


def initial_consumption(params: ModelParams, n):
    """First-generation consumption ``A k0**theta / S_n``; ``n`` may be real."""
    p = params
    n = np.asarray(n, dtype=float)
    x = p.bt
    if x == 1.0:
        s_n = n + 1.0
    else:
        s_n = -np.expm1((n + 1.0) * math.log(x)) / (1.0 - x)
    out = p.A * p.k0**p.theta / s_n
    return float(out) if out.ndim == 0 else out


def initial_consumption_infinite(params: ModelParams) -> float:
    p = params
    if p.bt >= 1.0:
        raise DegenerateLimit("beta*theta = 1: infinite-horizon initial consumption is 0")
    return (1.0 - p.bt) * p.A * p.k0**p.theta


def subsistence_horizon(params: ModelParams, exact: bool = False) -> float:
    """Horizon at which first-generation consumption reaches subsistence ``s``.

    The default is the log-ratio formula ``log(c0[inf] / s) / log(beta theta)``
    (``A k0 / s`` when beta = theta = 1). With ``exact=True`` the equation
    ``initial_consumption(n) == s`` is solved for real ``n`` instead; that
    returns ``inf`` when ``s <= c0[inf]`` since every horizon then keeps the
    first generation above subsistence.
    """
    p = params
    x = p.bt
    y0 = p.A * p.k0**p.theta
    if exact:
        if x == 1.0:
            n = y0 / p.s - 1.0
        else:
            c_inf = (1.0 - x) * y0
            if p.s <= c_inf:
                return math.inf
            n = math.log1p(-c_inf / p.s) / math.log(x) - 1.0
    elif x == 1.0:
        n = p.A * p.k0 / p.s
    else:
        n = (math.log((1.0 - x) * y0) - math.log(p.s)) / math.log(x)
    if n <= 0:
        raise NonPositive(f"subsistence s={p.s} is not reachable at any positive horizon (n={n:.6g})")
    return n
