import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynasty import (
    INFINITE,
    ModelParams,
    find_optimal_horizon,
    plateau_onset,
    population_value,
    value_curve,
    value_limit,
)
from dynasty.ak import ak_value_infinite
from dynasty.errors import NotApplicable
from dynasty.horizon import values

#: argmax of V[n] over horizons n (last generation index); inf = infinite horizon
EXPECTED_N = {"I": INFINITE, "II": 94, "III": 72, "IV": 57, "V": INFINITE, "VI": INFINITE, "VII": 116, "VIII": 54}


@pytest.fixture(scope="module")
def solved(cases):
    return {k: find_optimal_horizon(p) for k, p in cases.items()}


@pytest.mark.parametrize("name", list(EXPECTED_N))
def test_reference_cases(solved, name):
    sol = solved[name]
    assert sol.n_star == EXPECTED_N[name]
    if not sol.is_infinite:
        assert sol.generations == sol.n_star + 1


@pytest.mark.parametrize("name", ["II", "III", "IV", "VII", "VIII"])
def test_finite_optimum_matches_brute_scan(cases, solved, name):
    p = cases[name]
    # plain path values, no closed forms
    v = np.array([population_value(p, n) for n in range(400)])
    assert int(np.argmax(v)) == solved[name].n_star
    assert solved[name].v_at_star == pytest.approx(v.max(), abs=1e-9)


def test_reference_values(solved):
    assert solved["II"].v_at_star == pytest.approx(59.96521, abs=1e-5)
    assert solved["III"].v_at_star == pytest.approx(55.62667, abs=1e-5)
    assert solved["IV"].v_at_star == pytest.approx(50.97946, abs=1e-5)
    assert solved["VII"].v_at_star == pytest.approx(76.718, abs=1e-3)
    assert solved["VIII"].v_at_star == pytest.approx(55.18162, abs=1e-5)
    assert solved["I"].v_infinity == pytest.approx(84.67545, abs=1e-5)
    assert solved["V"].v_infinity == math.inf
    assert solved["VII"].v_infinity == -math.inf


def test_knife_edge_limit_differs_from_contribution_sum(solved):
    sol = solved["VI"]
    assert sol.is_infinite
    assert sol.v_infinity == pytest.approx(41.68763, abs=1e-5)
    assert sol.v_limit == pytest.approx(55.80129, abs=1e-4)


def test_stride_gives_same_optimum(cases):
    for name in ("II", "III", "IV"):
        a = find_optimal_horizon(cases[name])
        b = find_optimal_horizon(cases[name], stride=7)
        assert (a.n_star, a.v_at_star) == (b.n_star, b.v_at_star)
    assert find_optimal_horizon(cases["VII"], stride=5).n_star == 116


def test_deterministic(cases):
    a = find_optimal_horizon(cases["II"])
    b = find_optimal_horizon(cases["II"])
    assert a == b


def test_tie_resolves_to_smaller_horizon():
    # 2 log(k0/2) = 3 log(k0/3) at k0 = 27/4
    p = ModelParams(1.0, 1.0, 1.0, 27 / 4)
    v = values(p, [1, 2])
    assert v[0] == pytest.approx(v[1], abs=1e-13)
    assert find_optimal_horizon(p).n_star == 1


def test_akzd_growth_is_infinite():
    sol = find_optimal_horizon(ModelParams(1.01, 1.0, 1.0, 150))
    assert sol.is_infinite and sol.v_infinity == math.inf


def test_zd_negative_small_n_max_is_inconclusive(cases):
    sol = find_optimal_horizon(cases["VII"], n_max=50)
    assert sol.inconclusive and sol.n_star == 50


def test_general_regime_matches_brute_scan():
    p = ModelParams(0.99, 0.95, 0.9, 50.0)
    sol = find_optimal_horizon(p)
    v = np.array([population_value(p, n) for n in range(600)])
    if sol.is_infinite:
        assert sol.v_limit >= v.max() - 1e-9
    else:
        assert sol.n_star == int(np.argmax(v))


@settings(max_examples=15, deadline=None)
@given(st.floats(0.99, 1.02), st.floats(0.97, 0.995), st.floats(5.0, 300.0))
def test_ak_optimum_is_global(A, beta, k0):
    p = ModelParams(A, beta, 1.0, k0)
    sol = find_optimal_horizon(p)
    n = np.arange(0, 6000)
    v = values(p, n)
    if sol.is_infinite:
        assert sol.v_infinity >= v.max() - 1e-9
    else:
        assert sol.v_at_star == pytest.approx(v.max(), abs=1e-12)
        assert sol.v_at_star > ak_value_infinite(p)


def test_plateau_onset_case_I(cases):
    p = cases["I"]
    lim = ak_value_infinite(p)
    v = values(p, np.arange(6000))
    far = [n for n in range(6000) if abs(lim - v[n]) > 0.5e-3]
    assert plateau_onset(p, 0.5e-3) == far[-1] + 1 == 1782


def test_plateau_onset_knife_edge(cases):
    assert plateau_onset(cases["VI"], 0.5e-3) == 248
    assert plateau_onset(cases["VI"], 1e-4) == 283


def test_plateau_onset_huge_eps_is_zero(cases):
    assert plateau_onset(cases["I"], 1e6) == 0
    assert plateau_onset(cases["VI"], 1e6) == 0


@pytest.mark.parametrize("name", ["V", "VII", "VIII"])
def test_plateau_onset_not_applicable(cases, name):
    with pytest.raises(NotApplicable):
        plateau_onset(cases[name], 0.5e-3)
    with pytest.raises(NotApplicable):
        value_limit(cases[name])


def test_value_limit(cases):
    assert value_limit(cases["I"]) == ak_value_infinite(cases["I"])
    vl = value_limit(cases["VI"])
    assert population_value(cases["VI"], 5000) == pytest.approx(vl, abs=1e-8)


def test_value_curve_shape_and_errors(cases):
    vc = value_curve(cases["II"], 10, 30, 5)
    np.testing.assert_array_equal(vc.n, [10, 15, 20, 25, 30])
    with pytest.raises(ValueError):
        value_curve(cases["II"], 5, 2)
