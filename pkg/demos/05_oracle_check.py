"""Checking the closed forms against brute force.

Backward induction on a capital grid and a zooming search over whole
consumption vectors know nothing about the savings-rate rule, yet both land
on the same value and first-generation consumption.
"""
import time

import numpy as np

from dynasty import ModelParams, initial_consumption, population_value
from dynasty.oracle import brute_force_value, direct_search

rng = np.random.default_rng(1)

# %% random economies, short horizons
t0 = time.perf_counter()
worst = 0.0
for _ in range(10):
    p = ModelParams(rng.uniform(0.9, 1.2), rng.uniform(0.8, 1.0), rng.uniform(0.8, 1.0), rng.uniform(1, 200))
    for n in range(4):
        v = population_value(p, n)
        r = brute_force_value(p, n, 800)
        worst = max(worst, abs(r.value - v) / max(abs(v), 1e-300))
print(f"grid oracle: worst relative gap {worst:.2e} ({time.perf_counter() - t0:.1f}s)")

# %% a hand-checkable case
# two generations, A = beta = 1, theta = 1/2, k0 = 1: eat 2/3, keep 1/3
p = ModelParams(1.0, 1.0, 0.5, 1.0)
d = direct_search(p, 1)
print(f"direct search c0={d.c0:.7f} (rule: {initial_consumption(p, 1):.7f}), V={d.value:.6f}")

# %% why the grid oracle is this accurate
# V_t is affine in log k, and the oracle interpolates on (log k, V), so the
# only error left is the golden-section tolerance and rounding
r = brute_force_value(ModelParams(1.05, 0.9, 0.7, 20.0), 5, 200)
print(f"200-point grid, n=5: gap {abs(r.value - population_value(ModelParams(1.05, 0.9, 0.7, 20.0), 5)):.1e}")
