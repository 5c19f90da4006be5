"""Optimal consumption, capital and planning horizon of a dynasty under
Cobb-Douglas production with complete depreciation."""
from .ak import (
    FocCoefficients,
    FocRootReport,
    ValueShape,
    ak_capital,
    ak_contribution,
    ak_value,
    ak_value_infinite,
    foc_coefficients,
    foc_roots,
)
from .closed_form import (
    Trajectory,
    initial_consumption,
    initial_consumption_infinite,
    optimal_capital_path,
    optimal_consumption_path,
    population_value,
    subsistence_horizon,
)
from .horizon import (
    INFINITE,
    HorizonSolution,
    ValueCurve,
    find_optimal_horizon,
    plateau_onset,
    value_curve,
    value_limit,
)
from .inequality import GiniCurve, LorenzCurve, gini, gini_curve, lorenz
from .model import (
    ModelParams,
    PhaseClass,
    Regime,
    Sign,
    classify_phase,
    dual_productivity,
    geometric_sum,
    mpk,
    theta_for_unit_dual,
    transition,
)
from .oracle import OracleResult, brute_force_value, direct_search
from .zd import akzd_optimal_horizon, akzd_value, zd_contribution_infinite, zd_value_infinite

__version__ = "0.1.0"
