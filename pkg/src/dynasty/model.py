"""Model primitives: parameters, the capital transition and phase classification.

Depreciation is complete, so next-period capital intensity is output minus
consumption, ``k' = A k**theta - c``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import xlogy

from .errors import InvalidParams, NoRoot

#: absolute tolerance on log(A*beta), log(A*Theta) for knife-edge detection
ZERO_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Productivity ``A``, discount factor ``beta``, capital elasticity
    ``theta``, initial capital intensity ``k0`` and subsistence consumption
    ``s``."""

    A: float
    beta: float
    theta: float
    k0: float
    s: float = 1e-9

    def __post_init__(self):
        for name in ("A", "beta", "theta", "k0", "s"):
            v = getattr(self, name)
            if not isinstance(v, (int, float, np.floating, np.integer)) or not math.isfinite(v):
                raise InvalidParams(f"{name} must be a finite real, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.A <= 0:
            raise InvalidParams(f"A must be > 0, got {self.A}")
        if self.k0 <= 0:
            raise InvalidParams(f"k0 must be > 0, got {self.k0}")
        if self.s <= 0:
            raise InvalidParams(f"s must be > 0, got {self.s}")
        if not 0 < self.beta <= 1:
            raise InvalidParams(f"beta must lie in (0, 1], got {self.beta}")
        if not 0 < self.theta <= 1:
            raise InvalidParams(f"theta must lie in (0, 1], got {self.theta}")

    @property
    def bt(self) -> float:
        """The product beta*theta, the ratio of every geometric sum."""
        return self.beta * self.theta

    def with_(self, **changes) -> "ModelParams":
        return replace(self, **changes)


def geometric_sum(ell, params: ModelParams):
    """``1 + x + ... + x**ell`` with ``x = beta*theta``.

    Accepts an integer or an integer array for ``ell``.
    """
    x = params.bt
    ell = np.asarray(ell)
    if np.any(ell < 0):
        raise ValueError("ell must be nonnegative")
    if x == 1.0:
        out = ell + 1.0
    else:
        # expm1 keeps the ratio accurate when x is close to 1
        out = -np.expm1((ell + 1.0) * math.log(x)) / (1.0 - x)
        out = np.where(ell == 0, 1.0, out)
    return float(out) if out.ndim == 0 else out


def transition(k, c, params: ModelParams):
    """Next-period capital ``A k**theta - c``; may be negative."""
    return params.A * np.power(k, params.theta) - c


def dual_productivity(A: float, theta: float) -> float:
    """``A * theta**theta * (1-theta)**(1-theta)`` with ``0**0 = 1``."""
    return A * math.exp(xlogy(theta, theta) + xlogy(1.0 - theta, 1.0 - theta))


def theta_for_unit_dual(A: float, xtol: float = 0.0) -> float:
    """Upper root of ``A * Theta(theta) = 1`` on (0.5, 1).

    Bisection runs to machine resolution by default so that the resulting
    ``log(A*Theta)`` sits inside :data:`ZERO_TOL`.
    """
    if A == 1.0:
        return 1.0
    if A < 1.0:
        raise NoRoot(f"A={A} <= 1: A*Theta < 1 on the whole upper bracket (0.5, 1)")
    lo, hi = 0.5, 1.0 - 1e-15
    f_lo = dual_productivity(A, lo) - 1.0
    f_hi = dual_productivity(A, hi) - 1.0
    if f_lo > 0:
        raise NoRoot(f"A={A}: A*Theta(0.5) = {A / 2} > 1, lower bracket end already positive")
    if f_hi < 0:
        raise NoRoot(f"A={A}: A*Theta(1-1e-15) < 1, upper bracket end still negative")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if dual_productivity(A, mid) - 1.0 > 0:
            hi = mid
        else:
            lo = mid
    # pick whichever end sits closer to the root in log space
    g = lambda t: abs(math.log(dual_productivity(A, t)))
    return lo if g(lo) <= g(hi) else hi


def mpk(params: ModelParams, k):
    """Marginal product of capital net of (complete) depreciation."""
    return params.A * params.theta * np.power(k, params.theta - 1.0) - 1.0


class Regime(enum.Enum):
    AK = "AK"
    ZD = "ZD"
    AK_ZD = "AK_ZD"
    GENERAL = "General"


class Sign(enum.Enum):
    POSITIVE = "+"
    ZERO = "0"
    NEGATIVE = "-"

    @classmethod
    def of_log(cls, value: float, tol: float = ZERO_TOL) -> "Sign":
        if abs(value) <= tol:
            return cls.ZERO
        return cls.POSITIVE if value > 0 else cls.NEGATIVE


@dataclass(frozen=True)
class PhaseClass:
    """Regime plus the sign of its phase boundary.

    ``boundary_sign`` is the sign of log(A*beta) for AK, log(A*Theta) for ZD,
    log(A) for AK_ZD, and a pair (sign log(A*beta), sign log(A*Theta)) for
    the general regime.
    """

    regime: Regime
    boundary_sign: "Sign | tuple[Sign, Sign]"
    log_a_beta: float
    log_a_theta: float


def log_a_beta(params: ModelParams) -> float:
    return math.log(params.A) + math.log(params.beta)


def log_a_theta(params: ModelParams) -> float:
    return math.log(dual_productivity(params.A, params.theta))


def classify_phase(params: ModelParams) -> PhaseClass:
    lab, lat = log_a_beta(params), log_a_theta(params)
    ak, zd = Sign.of_log(lab), Sign.of_log(lat)
    if params.theta == 1.0 and params.beta == 1.0:
        return PhaseClass(Regime.AK_ZD, Sign.of_log(math.log(params.A)), lab, lat)
    if params.theta == 1.0:
        return PhaseClass(Regime.AK, ak, lab, lat)
    if params.beta == 1.0:
        return PhaseClass(Regime.ZD, zd, lab, lat)
    return PhaseClass(Regime.GENERAL, (ak, zd), lab, lat)
