"""No discounting with Cobb-Douglas output.

The infinite-horizon contribution path settles at log(A Theta)/(1-theta),
so the sign of A Theta - 1 decides everything: unbounded value, a finite
knife edge, or a finite optimal horizon.
"""
from pathlib import Path

import numpy as np

from dynasty import ModelParams, find_optimal_horizon, theta_for_unit_dual, value_curve
from dynasty.svg import line_chart
from dynasty.zd import zd_contribution_infinite, zd_plateau, zd_value_infinite

OUT = Path(__file__).with_name("out")
OUT.mkdir(exist_ok=True)
k0 = 150.0

# %% the three phases
cases = {
    "V": ModelParams(1.05, 1.0, 0.992, k0),
    "VI": ModelParams(1.2, 1.0, theta_for_unit_dual(1.2), k0),
    "VII": ModelParams(1.05, 1.0, 0.991, k0),
}
for name, p in cases.items():
    t = np.array([0, 10, 100, 1000])
    contrib = zd_contribution_infinite(p, t)
    print(f"{name:<4} theta={p.theta:.7f} plateau={zd_plateau(p):+.4f} "
          f"contrib(t={t.tolist()})={np.round(contrib, 3).tolist()} V_inf={zd_value_infinite(p):.4f}")

# %% finite horizons
sol = find_optimal_horizon(cases["VII"])
print(f"\nVII: optimal horizon {sol.n_star}, V={sol.v_at_star:.4f}")

series = []
for name, p in cases.items():
    vc = value_curve(p, 0, 600, 2)
    series.append((name, vc.n, vc.v))
(OUT / "zd_value_curves.svg").write_text(line_chart(series, "V[n] without discounting", "n", "V[n]"))

# %% sensitivity of the knife edge
# rounding theta to six places moves A Theta off 1 by ~1e-7, enough to
# turn the monotone climb into a peak a few hundred generations out
p = ModelParams(1.2, 1.0, round(cases["VI"].theta, 6), k0)
print(f"theta rounded: log(A Theta)={zd_plateau(p) * (1 - p.theta):+.2e}, "
      f"optimal horizon {find_optimal_horizon(p).n_star}")
