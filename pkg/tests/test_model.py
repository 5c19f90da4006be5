import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from dynasty import (
    ModelParams,
    Regime,
    Sign,
    classify_phase,
    dual_productivity,
    geometric_sum,
    mpk,
    theta_for_unit_dual,
    transition,
)
from dynasty.errors import InvalidParams, NoRoot

from .conftest import params_strategy


@pytest.mark.parametrize(
    "kw",
    [dict(A=0), dict(A=-1), dict(k0=0), dict(s=0), dict(beta=0), dict(beta=1.01), dict(theta=0), dict(theta=1.5),
     dict(A=math.nan)],
)
def test_params_validation(kw):
    base = dict(A=1.0, beta=0.9, theta=0.5, k0=1.0)
    with pytest.raises(InvalidParams):
        ModelParams(**{**base, **kw})


def test_params_default_subsistence_and_immutability():
    p = ModelParams(1, 1, 1, 150)
    assert p.s == 1e-9 and p.bt == 1.0
    with pytest.raises(AttributeError):
        p.A = 2.0


def test_geometric_sum_examples():
    assert geometric_sum(0, ModelParams(1.3, 0.7, 0.4, 2)) == 1.0
    assert geometric_sum(2, ModelParams(1, 0.5, 1, 1)) == pytest.approx(1.75, rel=1e-15)
    assert geometric_sum(54, ModelParams(1, 1, 1, 150)) == 55


def test_geometric_sum_vectorized():
    p = ModelParams(1, 0.9, 0.8, 1)
    ells = np.arange(10)
    np.testing.assert_allclose(geometric_sum(ells, p), [geometric_sum(int(e), p) for e in ells], rtol=1e-15)


@settings(max_examples=60, deadline=None)
@given(params_strategy(beta=(0.05, 1.0), theta=(0.05, 1.0)))
def test_geometric_sum_increments(p):
    ells = np.arange(1, 1001)
    s = geometric_sum(ells, p)
    prev = geometric_sum(ells - 1, p)
    # absolute in units of S: (beta theta)**ell drops below S's resolution
    assert np.all(np.abs((s - prev) - p.bt**ells) <= 1e-12 * s)


@settings(max_examples=25, deadline=None)
@given(params_strategy(beta=(0.05, 1.0), theta=(0.05, 1.0)), st.integers(0, 10**4))
def test_geometric_sum_matches_compensated_loop(p, ell):
    direct = math.fsum(p.bt**i for i in range(ell + 1))
    assert geometric_sum(ell, p) == pytest.approx(direct, rel=1e-12)


def test_transition_examples():
    p = ModelParams(1, 1, 0.5, 1)
    assert transition(1.0, 0.0, p) == 1.0
    assert transition(1.0, 2 / 3, p) == pytest.approx(1 / 3, rel=1e-15)
    q = ModelParams(1.3, 0.9, 0.7, 150)
    assert transition(150.0, q.A * 150.0**q.theta, q) == 0.0
    assert transition(1.0, 5.0, p) < 0


def test_dual_productivity_examples():
    assert dual_productivity(1, 0.5) == pytest.approx(0.5, rel=1e-15)
    assert dual_productivity(3, 1.0) == 3.0
    assert dual_productivity(1.2, 0.955392) == pytest.approx(1.0, abs=1e-5)
    assert dual_productivity(2.0, 1e-300) == pytest.approx(2.0)


@given(st.floats(0.01, 10), st.floats(1e-6, 1.0))
def test_dual_productivity_bounded_by_A(A, theta):
    B = dual_productivity(A, theta)
    if theta == 1.0:
        assert B == A
    else:
        assert B < A


def test_theta_for_unit_dual_table_value():
    th = theta_for_unit_dual(1.2)
    assert th == pytest.approx(0.955392, abs=1e-5)
    assert abs(math.log(dual_productivity(1.2, th))) <= 1e-12


def test_theta_for_unit_dual_against_brent():
    th = theta_for_unit_dual(1.05)
    ref = brentq(lambda t: dual_productivity(1.05, t) - 1.0, 0.5, 1 - 1e-15, xtol=1e-15, rtol=1e-15)
    assert th == pytest.approx(ref, abs=1e-12)
    assert dual_productivity(1.05, th) == pytest.approx(1.0, abs=1e-14)
    assert 0.5 < th < 1


def test_theta_for_unit_dual_edges():
    assert theta_for_unit_dual(1.0) == 1.0
    assert theta_for_unit_dual(1 + 1e-12) > 1 - 1e-10
    with pytest.raises(NoRoot, match="lower bracket"):
        theta_for_unit_dual(2.5)
    with pytest.raises(NoRoot):
        theta_for_unit_dual(0.9)


def test_mpk_examples():
    assert mpk(ModelParams(1.05, 0.9, 1, 3), 7.0) == pytest.approx(0.05, rel=1e-12)
    assert mpk(ModelParams(1, 1, 1, 150), 150.0) == 0.0
    assert mpk(ModelParams(1, 0.9, 0.5, 4), 4.0) == pytest.approx(-0.75, rel=1e-15)


def test_classify_phase_table_rows(cases):
    expect = {
        "I": (Regime.AK, Sign.POSITIVE), "II": (Regime.AK, Sign.POSITIVE),
        "III": (Regime.AK, Sign.ZERO), "IV": (Regime.AK, Sign.NEGATIVE),
        "V": (Regime.ZD, Sign.POSITIVE), "VI": (Regime.ZD, Sign.ZERO),
        "VII": (Regime.ZD, Sign.NEGATIVE), "VIII": (Regime.AK_ZD, Sign.ZERO),
    }
    for name, (regime, sign) in expect.items():
        ph = classify_phase(cases[name])
        assert (ph.regime, ph.boundary_sign) == (regime, sign), name


def test_classify_phase_general_carries_both_signs():
    ph = classify_phase(ModelParams(1.1, 0.9, 0.7, 10))
    assert ph.regime is Regime.GENERAL
    assert ph.boundary_sign == (Sign.NEGATIVE, Sign.NEGATIVE)


def test_boundary_sign_flips_at_unit_products():
    beta = 0.95
    for A in np.linspace(0.9, 1.2, 61):
        s = classify_phase(ModelParams(A, beta, 1, 1)).boundary_sign
        assert s is (Sign.POSITIVE if A * beta > 1 else Sign.NEGATIVE)
    assert classify_phase(ModelParams(1 / beta, beta, 1, 1)).boundary_sign is Sign.ZERO
    th = theta_for_unit_dual(1.3)
    for d in (-1e-6, 1e-6):
        s = classify_phase(ModelParams(1.3, 1, th + d, 1)).boundary_sign
        # Theta increases with theta above 1/2
        assert s is (Sign.POSITIVE if d > 0 else Sign.NEGATIVE)
    assert classify_phase(ModelParams(1.3, 1, th, 1)).boundary_sign is Sign.ZERO
