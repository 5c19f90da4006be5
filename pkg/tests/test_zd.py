import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynasty import ModelParams, population_value, theta_for_unit_dual
from dynasty.ak import ak_value
from dynasty.closed_form import optimal_consumption_path
from dynasty.errors import InvalidParams, NonPositive
from dynasty.zd import (
    akzd_optimal_horizon,
    akzd_value,
    zd_contribution_infinite,
    zd_plateau,
    zd_value_infinite,
)


def test_requires_zd_regime():
    for p in (ModelParams(1, 0.9, 0.8, 1), ModelParams(1, 1, 1, 1)):
        with pytest.raises(InvalidParams):
            zd_plateau(p)


@pytest.mark.parametrize("A,theta", [(1.05, 0.992), (1.05, 0.991), (1.2, 0.9), (1.0, 0.5)])
def test_infinite_contributions_match_long_horizon_path(A, theta):
    p = ModelParams(A, 1.0, theta, 150)
    t = np.arange(40)
    tr = optimal_consumption_path(p, 20000)
    np.testing.assert_allclose(tr.contrib[:40], zd_contribution_infinite(p, t), rtol=1e-6, atol=1e-6)


@pytest.mark.parametrize("A,theta", [(1.05, 0.992), (1.05, 0.991), (1.3, 0.8)])
def test_contributions_approach_plateau(A, theta):
    p = ModelParams(A, 1.0, theta, 150)
    far = zd_contribution_infinite(p, 10**5)
    assert far == pytest.approx(zd_plateau(p), abs=1e-9)
    assert np.sign(zd_plateau(p)) == np.sign(math.log(A) + theta * math.log(theta) + (1 - theta) * math.log(1 - theta))


def test_value_infinite_signs(cases):
    assert zd_value_infinite(cases["V"]) == math.inf
    assert zd_value_infinite(cases["VII"]) == -math.inf
    assert zd_value_infinite(cases["VI"]) == pytest.approx(41.688, abs=1e-3)


def test_knife_edge_value_is_sum_of_contributions():
    p = ModelParams(1.2, 1.0, theta_for_unit_dual(1.2), 150)
    assert abs(zd_plateau(p)) < 1e-10
    total = math.fsum(zd_contribution_infinite(p, np.arange(200000)))
    assert total == pytest.approx(zd_value_infinite(p), abs=1e-6)


def test_knife_edge_tolerance():
    p = ModelParams(1.2, 1.0, theta_for_unit_dual(1.2) + 1e-9, 150)
    assert zd_value_infinite(p) == math.inf
    assert math.isfinite(zd_value_infinite(p, tol=1e-6))


def test_akzd_value_examples():
    assert akzd_value(150, 0) == pytest.approx(math.log(150))
    assert akzd_value(150, 54) == pytest.approx(55 * math.log(150 / 55))
    assert akzd_value(150, 54) == pytest.approx(55.182, abs=1e-3)
    np.testing.assert_allclose(akzd_value(150, np.arange(3)), [akzd_value(150, i) for i in range(3)])


@settings(max_examples=30, deadline=None)
@given(st.floats(0.95, 1.05), st.floats(1.0, 300.0), st.integers(0, 300))
def test_akzd_matches_path(A, k0, n):
    p = ModelParams(A, 1.0, 1.0, k0)
    assert akzd_value(k0, n, A) == pytest.approx(population_value(p, n), rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("n", [0, 5, 20, 35])
def test_akzd_is_discount_limit_of_ak(n):
    near = ModelParams(1.0, 1 - 1e-6, 1.0, 150)
    assert ak_value(near, n) == pytest.approx(akzd_value(150, n), abs=1e-3)


@pytest.mark.parametrize("n", [54, 120])
def test_discount_gap_is_first_order(n):
    # V_beta - V_1 ~ -(1 - beta) sum t log c_t, so the gap shrinks linearly
    slope = sum(t * math.log(150 / (n + 1)) for t in range(n + 1))
    for eps in (1e-6, 1e-7):
        gap = ak_value(ModelParams(1.0, 1 - eps, 1.0, 150), n) - akzd_value(150, n)
        assert gap == pytest.approx(-eps * slope, rel=1e-3)


def test_akzd_optimal_horizon():
    assert akzd_optimal_horizon(150) == pytest.approx(150 / math.e - 1)
    assert math.floor(akzd_optimal_horizon(150)) == 54
    assert akzd_optimal_horizon(math.e) == 0.0
    with pytest.raises(NonPositive):
        akzd_optimal_horizon(2.0)
    with pytest.raises(InvalidParams):
        akzd_optimal_horizon(0.0)


@settings(max_examples=40, deadline=None)
@given(st.floats(3.0, 2000.0))
def test_akzd_integer_argmax_adjacent_to_continuous(k0):
    n_c = akzd_optimal_horizon(k0)
    ns = np.arange(0, int(n_c) + 5)
    best = int(ns[np.argmax(akzd_value(k0, ns))])
    assert best in (math.floor(n_c), math.ceil(n_c))
