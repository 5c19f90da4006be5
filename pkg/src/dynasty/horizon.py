"""Search for the value-maximizing planning horizon.

``V[n]`` is evaluated with the cheapest exact formula the regime admits
(closed forms for AK and AK-ZD, the log-space path simulation otherwise) and
the best finite horizon is weighed against the infinite-horizon value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ak, zd
from .closed_form import population_value
from .errors import NotApplicable
from .model import ModelParams, PhaseClass, Regime, Sign, classify_phase

INFINITE = math.inf

#: |V[n] - V[n+1]| below this counts as a tie, resolved toward the smaller n
TIE_TOL = 1e-12
#: consecutive increments examined by the stopping rules
WINDOW = 20


@dataclass(frozen=True)
class HorizonSolution:
    """Result of :func:`find_optimal_horizon`.

    ``n_star`` is the index of the last generation (``inf`` when the
    infinite horizon is optimal). ``v_infinity`` is the analytic
    infinite-horizon value, ``None`` where no formula exists. ``v_limit`` is
    ``lim V[n]`` as determined by the scan (finite cases only); in the
    ``A Theta = 1`` knife edge it differs from ``v_infinity``.
    """

    n_star: float
    v_at_star: float | None
    v_infinity: float | None
    phase: PhaseClass
    v_limit: float | None = None
    plateau_onset: int | None = None
    inconclusive: bool = False
    scanned_to: int = 0

    @property
    def is_infinite(self) -> bool:
        return self.n_star == INFINITE

    @property
    def generations(self) -> float:
        """Number of generations ``n_star + 1`` in the optimal dynasty."""
        return self.n_star + 1


@dataclass(frozen=True)
class ValueCurve:
    n: np.ndarray
    v: np.ndarray


def values(params: ModelParams, ns) -> np.ndarray:
    """``V[n]`` for each integer in ``ns``."""
    ns = np.asarray(ns, dtype=int)
    regime = classify_phase(params).regime
    if regime is Regime.AK:
        return np.asarray(ak.ak_value(params, ns), dtype=float).reshape(ns.shape)
    if regime is Regime.AK_ZD:
        return np.asarray(zd.akzd_value(params.k0, ns, A=params.A), dtype=float).reshape(ns.shape)
    return np.array([population_value(params, int(n)) for n in ns.ravel()]).reshape(ns.shape)


def value_curve(params: ModelParams, n_from: int, n_to: int, stride: int = 1) -> ValueCurve:
    if not 0 <= n_from <= n_to:
        raise ValueError(f"need 0 <= n_from <= n_to, got {n_from}, {n_to}")
    ns = np.arange(n_from, n_to + 1, stride)
    return ValueCurve(n=ns, v=values(params, ns))


def _argmax_first(v: np.ndarray) -> int:
    """Index of the maximum, smallest index among near-ties."""
    return int(np.flatnonzero(v >= v.max() - TIE_TOL)[0])


def _refine(params, ns: np.ndarray, v: np.ndarray, stride: int, hi: int):
    """Stride-1 search around the coarse optimum."""
    i = _argmax_first(v)
    if stride == 1:
        return int(ns[i]), float(v[i])
    lo_n, hi_n = max(int(ns[i]) - stride + 1, 0), min(int(ns[i]) + stride - 1, hi)
    local = np.arange(lo_n, hi_n + 1)
    lv = values(params, local)
    j = _argmax_first(lv)
    return int(local[j]), float(lv[j])


def _ak_cut(params: ModelParams, n_max: int) -> int:
    return int(min(n_max, math.ceil(math.log(ak.TAIL_CUT) / math.log(params.beta))))


class _Scan:
    """Incremental evaluation of ``V[n]`` on ``0, stride, 2 stride, ...``."""

    def __init__(self, params, stride):
        self.params, self.stride = params, stride
        self.ns, self.vs = [], []

    def step(self):
        n = len(self.ns) * self.stride
        self.ns.append(n)
        self.vs.append(population_value(self.params, n))
        return n

    def increments(self, w):
        v = np.asarray(self.vs[-(w + 1):])
        return np.diff(v) / self.stride

    def arrays(self):
        return np.asarray(self.ns), np.asarray(self.vs)


def _converged_limit(scan: _Scan, tol: float, n_max: int):
    """Extend ``scan`` until increments drop below ``tol``; return the limit
    estimate with a geometric tail correction, or None on reaching n_max."""
    while True:
        n = scan.step()
        if len(scan.vs) > WINDOW + 1:
            d = scan.increments(WINDOW)
            if np.all(np.abs(d) < tol):
                r = d[-1] / d[-2] if d[-2] != 0 else 0.0
                tail = d[-1] * scan.stride * r / (1 - r) if 0 < r < 1 else 0.0
                return scan.vs[-1] + tail
        if n >= n_max:
            return None


def find_optimal_horizon(
    params: ModelParams,
    n_max: int = 10**5,
    eps: float = 1e-9,
    stride: int = 1,
    plateau_eps: float = 0.5e-3,
) -> HorizonSolution:
    phase = classify_phase(params)
    regime = phase.regime
    sign = phase.boundary_sign

    if regime is Regime.AK:
        cut = _ak_cut(params, n_max)
        ns = np.arange(0, cut + 1, stride)
        v = values(params, ns)
        v_inf = ak.ak_value_infinite(params)
        n_star, v_star = _refine(params, ns, v, stride, cut)
        onset = plateau_onset(params, plateau_eps)
        if v_star > v_inf + eps:
            return HorizonSolution(n_star, v_star, v_inf, phase, v_inf, onset, scanned_to=cut)
        return HorizonSolution(INFINITE, None, v_inf, phase, v_inf, onset, scanned_to=cut)

    if regime is Regime.AK_ZD:
        if sign is Sign.POSITIVE:
            return HorizonSolution(INFINITE, None, math.inf, phase)
        # concave in n; the continuous optimum bounds the search
        ns = np.arange(0, n_max + 1, stride)
        v = values(params, ns)
        n_star, v_star = _refine(params, ns, v, stride, n_max)
        return HorizonSolution(n_star, v_star, -math.inf, phase, scanned_to=int(ns[-1]))

    if regime is Regime.ZD and sign is Sign.POSITIVE:
        return HorizonSolution(INFINITE, None, math.inf, phase)

    scan = _Scan(params, stride)
    inconclusive = False
    v_limit = None
    if regime is Regime.ZD and sign is Sign.NEGATIVE:
        v_inf = -math.inf
        while True:
            n = scan.step()
            if len(scan.vs) > WINDOW + 1:
                d = scan.increments(WINDOW)
                # increments negative and still decreasing: V heads to -inf
                if np.all(d < 0) and np.all(np.diff(d) <= 0):
                    break
            if n >= n_max:
                inconclusive = True
                break
    else:
        v_inf = zd.zd_value_infinite(params) if regime is Regime.ZD else None
        tol = eps
        if regime is Regime.GENERAL:
            # the discounted tail beyond n is O(beta**n / (1 - beta))
            tol = eps * (1 - params.beta)
        v_limit = _converged_limit(scan, tol, n_max)
        inconclusive = v_limit is None and scan.increments(1)[-1] > 0
    ns, v = scan.arrays()
    n_star, v_star = _refine(params, ns, v, stride, int(ns[-1]))
    onset = None
    if v_limit is not None and regime is Regime.ZD:
        onset = _onset(ns, v, v_limit, plateau_eps, stride, params)
    if inconclusive or v_limit is None or v_star > v_limit + eps:
        return HorizonSolution(
            n_star, v_star, v_inf, phase, v_limit, onset, inconclusive, scanned_to=int(ns[-1])
        )
    return HorizonSolution(INFINITE, None, v_inf, phase, v_limit, onset, scanned_to=int(ns[-1]))


def _onset(ns, v, limit, eps, stride, params) -> int:
    far = np.flatnonzero(np.abs(limit - v) > eps)
    if far.size == 0:
        return 0
    last = int(ns[far[-1]])
    if stride == 1:
        return last + 1
    local = np.arange(last + 1, last + stride + 1)
    lv = values(params, local)
    ok = np.flatnonzero(np.abs(limit - lv) <= eps)
    return int(local[ok[0]]) if ok.size else last + stride


def value_limit(params: ModelParams, tol: float = 1e-13, n_max: int = 10**5) -> float:
    """``lim V[n]`` for the regimes where it is finite (AK, and ZD on the
    knife edge ``A Theta = 1``)."""
    phase = classify_phase(params)
    if phase.regime is Regime.AK:
        return ak.ak_value_infinite(params)
    if phase.regime is Regime.ZD and phase.boundary_sign is Sign.ZERO:
        lim = _converged_limit(_Scan(params, 1), tol, n_max)
        if lim is None:
            raise NotApplicable(f"V[n] did not settle within n_max={n_max}")
        return lim
    raise NotApplicable(f"no finite value limit in regime {phase.regime.value} ({phase.boundary_sign})")


def plateau_onset(params: ModelParams, eps: float, n_max: int = 10**5) -> int:
    """Smallest ``n`` from which every later ``V[m]`` stays within ``eps`` of
    ``lim V[n]``."""
    phase = classify_phase(params)
    if phase.regime is Regime.AK:
        cut = _ak_cut(params, n_max)
        ns = np.arange(cut + 1)
        return _onset(ns, values(params, ns), ak.ak_value_infinite(params), eps, 1, params)
    if phase.regime is Regime.ZD and phase.boundary_sign is Sign.ZERO:
        scan = _Scan(params, 1)
        lim = _converged_limit(scan, 1e-13, n_max)
        if lim is None:
            raise NotApplicable(f"V[n] did not settle within n_max={n_max}")
        ns, v = scan.arrays()
        return _onset(ns, v, lim, eps, 1, params)
    raise NotApplicable(
        f"plateau onset needs a finite value limit; regime {phase.regime.value} has none"
    )
