"""Linear technology (theta = 1) with discounting (beta < 1).

Consumption grows geometrically at rate ``A beta``, so contributions
``log c_t`` are affine in ``t`` and the population value has a closed form
that is analytic in a real-valued horizon ``n``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParams
from .model import ModelParams
from .numerics import bisect

#: scan stops once beta**(n+1) falls below this; g[n] is then 0 to double precision
TAIL_CUT = 1e-16


def _require_ak(params: ModelParams):
    if params.theta != 1.0 or not params.beta < 1.0:
        raise InvalidParams(f"AK formulas need theta = 1 and beta < 1, got {params}")


def _one_minus_pow(beta: float, e):
    """``1 - beta**e`` without cancellation near beta = 1."""
    return -np.expm1(np.asarray(e, dtype=float) * math.log(beta))


def ak_value(params: ModelParams, n):
    """Population value for horizon ``n`` (real or array)."""
    _require_ak(params)
    A, b, k0 = params.A, params.beta, params.k0
    n = np.asarray(n, dtype=float)
    bn1 = np.power(b, n + 1.0)
    om = _one_minus_pow(b, n + 1.0)
    growth = (b - ((1.0 - b) * n + 1.0) * bn1) / (1.0 - b) ** 2 * math.log(A * b)
    level = om / (1.0 - b) * (math.log((1.0 - b) * A * k0) - np.log(om))
    out = growth + level
    return float(out) if out.ndim == 0 else out


def ak_value_infinite(params: ModelParams) -> float:
    _require_ak(params)
    A, b, k0 = params.A, params.beta, params.k0
    return (math.log(A) + (1.0 - b) * math.log(1.0 - b) + b * math.log(b)) / (1.0 - b) ** 2 + math.log(
        k0
    ) / (1.0 - b)


@dataclass(frozen=True)
class FocCoefficients:
    """``dV/dn = lam(n) * (gamma - n log(A beta) + log(1 - beta**(n+1)))``.

    ``lam(n) = beta**n * beta log(beta) / (1 - beta)`` is negative for every
    ``n``, so V rises exactly where ``f[n] > g[n]``.
    """

    beta: float
    gamma: float
    log_a_beta: float

    def lam(self, n):
        b = self.beta
        return np.power(b, np.asarray(n, dtype=float)) * b * math.log(b) / (1.0 - b)

    def bracket(self, n):
        n = np.asarray(n, dtype=float)
        return self.gamma - n * self.log_a_beta + np.log(_one_minus_pow(self.beta, n + 1.0))

    def dvdn(self, n):
        return self.lam(n) * self.bracket(n)

    def f(self, n):
        return -self.gamma + np.asarray(n, dtype=float) * self.log_a_beta

    def g(self, n):
        return np.log(_one_minus_pow(self.beta, np.asarray(n, dtype=float) + 1.0))


def foc_coefficients(params: ModelParams) -> FocCoefficients:
    _require_ak(params)
    A, b, k0 = params.A, params.beta, params.k0
    lab = math.log(A * b)
    lb = math.log(b)
    gamma = 1.0 - lab * (1.0 - b + lb) / ((1.0 - b) * lb) - math.log(A * (1.0 - b) * k0)
    return FocCoefficients(beta=b, gamma=gamma, log_a_beta=lab)


class ValueShape(enum.Enum):
    SINGLE_PEAK = "SinglePeak"
    RISE_FALL_RISE = "RiseFallRise"
    MONOTONE_RISE = "MonotoneRise"
    FALL_RISE = "FallRise"
    MONOTONE_FALL = "MonotoneFall"


@dataclass(frozen=True)
class FocRootReport:
    roots: tuple
    shape: ValueShape
    scan_end: int
    diagnostic: str = ""
    coefficients: FocCoefficients = field(default=None, repr=False)


def foc_roots(params: ModelParams, n_max: int = 10**6, xtol: float = 1e-9) -> FocRootReport:
    """Real horizons ``n >= 0`` where ``f[n] = g[n]``.

    ``f - g`` is scanned on the integers until ``beta**(n+1) < 1e-16``; past
    that point ``g`` is zero and the linear ``f`` settles any remaining
    crossing analytically.
    """
    coef = foc_coefficients(params)
    h = lambda n: float(coef.f(n) - coef.g(n))
    b = params.beta
    n_cut = int(min(n_max, math.ceil(math.log(TAIL_CUT) / math.log(b))))
    grid = np.arange(n_cut + 1, dtype=float)
    hv = coef.f(grid) - coef.g(grid)
    roots = []
    for i in np.flatnonzero(np.sign(hv[:-1]) != np.sign(hv[1:])):
        if hv[i] == 0:
            roots.append(float(i))
            continue
        roots.append(bisect(h, float(i), float(i + 1), xtol=xtol))
    diagnostic = ""
    lab = coef.log_a_beta
    if hv[-1] < 0 and lab > 0:
        # beyond the cut f - g ~ -gamma + n lab, a single crossing at gamma / lab
        hi = max(float(n_cut) + 1.0, 2.0 * coef.gamma / lab + 1.0)
        if hi > n_max:
            diagnostic = f"second crossing lies beyond n_max={n_max} (near n={coef.gamma / lab:.6g})"
        else:
            roots.append(bisect(h, float(n_cut), hi, xtol=xtol))
    start_rising = hv[0] > 0
    if lab <= 0:
        shape = ValueShape.SINGLE_PEAK if start_rising else ValueShape.MONOTONE_FALL
    elif not start_rising:
        shape = ValueShape.FALL_RISE
    elif roots or diagnostic:
        shape = ValueShape.RISE_FALL_RISE
    else:
        shape = ValueShape.MONOTONE_RISE
    return FocRootReport(
        roots=tuple(roots), shape=shape, scan_end=n_cut, diagnostic=diagnostic, coefficients=coef
    )


def ak_contribution(params: ModelParams, n, t):
    """Undiscounted contribution ``log c_t`` for horizon ``n``."""
    _require_ak(params)
    A, b, k0 = params.A, params.beta, params.k0
    t = np.asarray(t, dtype=float)
    out = math.log((1.0 - b) * A * k0) - np.log(_one_minus_pow(b, n + 1.0)) + t * math.log(A * b)
    return float(out) if out.ndim == 0 else out


def ak_capital(params: ModelParams, n, t):
    _require_ak(params)
    A, b, k0 = params.A, params.beta, params.k0
    t = np.asarray(t, dtype=float)
    out = _one_minus_pow(b, n + 1.0 - t) / _one_minus_pow(b, n + 1.0) * np.power(A * b, t) * k0
    return float(out) if out.ndim == 0 else out
