"""Scalar root bracketing and a vectorized golden-section maximizer."""
from __future__ import annotations

import math

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def bisect(f, lo: float, hi: float, xtol: float = 1e-9, maxiter: int = 200) -> float:
    """Root of ``f`` in ``[lo, hi]``; the ends must carry opposite signs."""
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]: f={f_lo}, {f_hi}")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol or mid in (lo, hi):
            break
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def golden_max(f, a, b, iters: int = 90):
    """Maximize a unimodal ``f`` elementwise on brackets ``[a, b]``.

    ``f`` maps an array of abscissae to an array of values of the same
    shape, so many independent one-dimensional problems are solved at once.
    Returns ``(x, f(x))``.
    """
    a = np.array(a, dtype=float, copy=True)
    b = np.array(b, dtype=float, copy=True)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        left = fc >= fd  # maximum lies in [a, d]
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        new_c = b - INV_PHI * (b - a)
        new_d = a + INV_PHI * (b - a)
        # reuse the surviving interior point, evaluate the other one
        c_next = np.where(left, new_c, d)
        d_next = np.where(left, c, new_d)
        probe = np.where(left, c_next, d_next)
        fp = f(probe)
        fc, fd = np.where(left, fp, fd), np.where(left, fc, fp)
        c, d = c_next, d_next
    x = 0.5 * (a + b)
    return x, f(x)
