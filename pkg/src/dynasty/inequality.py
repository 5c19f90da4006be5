"""Intergenerational inequality of optimal consumption streams."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closed_form import optimal_consumption_path
from .errors import DegenerateStream, EmptyStream
from .model import ModelParams


@dataclass(frozen=True)
class LorenzCurve:
    p: np.ndarray  # population share, 0..1
    q: np.ndarray  # consumption share, 0..1

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.p, self.q])

    def __call__(self, x):
        """Piecewise-linear evaluation at population shares ``x``."""
        return np.interp(x, self.p, self.q)


@dataclass(frozen=True)
class GiniCurve:
    n: np.ndarray
    g: np.ndarray


def _stream(c) -> np.ndarray:
    c = np.asarray(c, dtype=float).ravel()
    if c.size == 0:
        raise EmptyStream("consumption stream is empty")
    if np.any(~(c > 0)):
        raise ValueError("consumption stream must be strictly positive")
    return c


def lorenz(c) -> LorenzCurve:
    c = np.sort(_stream(c))
    m = c.size
    cum = np.concatenate(([0.0], np.cumsum(c)))
    q = cum / cum[-1]
    q[-1] = 1.0
    return LorenzCurve(p=np.arange(m + 1) / m, q=q)


def gini(c, denominator: str = "paper") -> float:
    """Mean absolute difference index of a stream ``c_0..c_n``.

    ``denominator="paper"`` divides the double sum of ``|c_t - c_t'|`` by
    ``2 n sum(c)``; ``"conventional"`` uses ``2 (n+1) sum(c)``.
    """
    c = np.sort(_stream(c))
    m = c.size
    if denominator == "paper":
        if m < 2:
            raise DegenerateStream("a single-generation stream has n = 0 and no defined index")
        scale = m - 1
    elif denominator == "conventional":
        scale = m
    else:
        raise ValueError(f"denominator must be 'paper' or 'conventional', got {denominator!r}")
    # sum_{i,j} |c_i - c_j| = 2 sum_i (2i - m + 1) c_(i) over the sorted stream
    i = np.arange(m)
    pair_sum = 2.0 * np.dot(2 * i - m + 1, c)
    return float(pair_sum / (2.0 * scale * c.sum()))


def gini_curve(
    params: ModelParams, n_from: int, n_to: int, stride: int = 1, denominator: str = "paper"
) -> GiniCurve:
    if n_from < 1:
        raise ValueError(f"n_from must be >= 1, got {n_from}")
    ns = np.arange(n_from, n_to + 1, stride)
    g = np.array([gini(optimal_consumption_path(params, int(n)).c, denominator) for n in ns])
    return GiniCurve(n=ns, g=g)
