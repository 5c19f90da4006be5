"""Inequality across generations along the optimal plan.

Discounting makes consumption drift, so stretching the horizon spreads it
out; without discounting the stream flattens as the horizon grows.
"""
from pathlib import Path

import numpy as np

from dynasty import ModelParams, gini, gini_curve, lorenz, optimal_consumption_path, theta_for_unit_dual
from dynasty.svg import line_chart

OUT = Path(__file__).with_name("out")
OUT.mkdir(exist_ok=True)
k0 = 150.0

# %% Gini index against the horizon
ak = [(f"beta={b}", ModelParams(1.0, b, 1.0, k0)) for b in (0.9, 0.99)]
zd = [(f"theta={t}", ModelParams(1.0, 1.0, t, k0)) for t in (0.9, 0.95)]
for title, group, fname in (("linear technology", ak, "gini_ak.svg"), ("no discounting", zd, "gini_zd.svg")):
    series = []
    for label, p in group:
        gc = gini_curve(p, 10, 600, 10)
        series.append((label, gc.n, gc.g))
        print(f"{title:<18} {label:<11} G[50]={gc.g[4]:.4f} G[300]={gc.g[29]:.4f} G[600]={gc.g[-1]:.4f}")
    (OUT / fname).write_text(line_chart(series, f"Gini index, {title}", "n", "G[n]"))

# %% two denominators
# the default divides by 2 n sum(c); the conventional index uses 2 (n+1) sum(c)
c = optimal_consumption_path(ModelParams(1.0, 0.9, 1.0, k0), 20).c
print(f"\nn=20: index {gini(c):.4f}, conventional {gini(c, 'conventional'):.4f}")

# %% Lorenz curves at three horizons for the knife-edge economy
p = ModelParams(1.2, 1.0, theta_for_unit_dual(1.2), k0)
series = []
for n in (200, 400, 600):
    L = lorenz(optimal_consumption_path(p, n).c)
    series.append((f"n={n}", L.p, L.q))
    print(f"knife edge n={n}: bottom half holds {L(0.5):.4f} of consumption")
series.append(("equality", [0, 1], [0, 1]))
(OUT / "lorenz_knife_edge.svg").write_text(line_chart(series, "Lorenz curves", "population share", "consumption share"))
