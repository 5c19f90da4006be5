"""Value of a dynasty under linear technology, as a function of its horizon.

With theta = 1 the population value is available in closed form for real
n, and its derivative factors into a negative scale times a bracket. The
sign of the bracket, f[n] versus g[n], tells where V rises.
"""
from pathlib import Path

import numpy as np

from dynasty import ModelParams, value_curve
from dynasty.ak import ak_value, ak_value_infinite, foc_roots
from dynasty.svg import line_chart

OUT = Path(__file__).with_name("out")
OUT.mkdir(exist_ok=True)
beta, k0 = 0.992, 150.0

# %% four growth rates
series = []
for A in (1.012, 1.01, 1 / beta, 1.005):
    p = ModelParams(A, beta, 1.0, k0)
    rep = foc_roots(p)
    roots = ", ".join(f"{r:.3f}" for r in rep.roots) or "none"
    print(f"A={A:.6f}  log(A beta)={np.log(A * beta):+.5f}  shape={rep.shape.value:<13} roots: {roots}")
    vc = value_curve(p, 0, 1500, 5)
    series.append((f"A={A:.4f}", vc.n, vc.v))

(OUT / "ak_value_curves.svg").write_text(line_chart(series, "V[n] under linear technology", "n", "V[n]"))

# %% the growing case: a local peak, a dip, then the long climb
p = ModelParams(1.01, beta, 1.0, k0)
n1, n2 = foc_roots(p).roots
print(f"\nlocal max near n={n1:.2f}: V={ak_value(p, n1):.5f}")
print(f"local min near n={n2:.2f}: V={ak_value(p, n2):.5f}")
print(f"limit V[inf] = {ak_value_infinite(p):.5f}")
# the climb back never reaches the early peak, so the finite horizon wins
