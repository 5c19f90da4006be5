"""Scenarios, the eight reference cases, CSV/SVG emitters and the
verification suite behind the command line."""
from __future__ import annotations

import configparser
import csv
import io
import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import ak, svg
from .closed_form import initial_consumption, optimal_consumption_path
from .errors import ConfigError, DynastyError
from .horizon import HorizonSolution, find_optimal_horizon, value_curve
from .inequality import gini, gini_curve, lorenz
from .model import ModelParams, classify_phase, log_a_beta, log_a_theta, theta_for_unit_dual
from .oracle import brute_force_value, direct_search

K0 = 150.0
CONFIG_KEYS = ("A", "beta", "theta", "k0", "s", "n", "n_from", "n_to", "stride", "eps")


@dataclass(frozen=True)
class Scenario:
    name: str
    params: ModelParams
    n: int | None = None
    n_range: tuple[int, int, int] | None = None
    eps: float = 0.5e-3

    def __post_init__(self):
        if self.n is not None and self.n_range is not None:
            raise ConfigError(f"scenario {self.name!r}: give either n or n_from/n_to, not both")


def builtin_cases() -> dict[str, Scenario]:
    b = 0.992
    rows = {
        "I": (1.012, b, 1.0),
        "II": (1.01, b, 1.0),
        "III": (1.0 / b, b, 1.0),
        "IV": (1.005, b, 1.0),
        "V": (1.05, 1.0, 0.992),
        "VI": (1.2, 1.0, theta_for_unit_dual(1.2)),
        "VII": (1.05, 1.0, 0.991),
        "VIII": (1.0, 1.0, 1.0),
    }
    return {k: Scenario(k, ModelParams(A, be, th, K0)) for k, (A, be, th) in rows.items()}


@dataclass(frozen=True)
class Golden:
    n_star: float | None = None  # inf for an infinite horizon
    v_at_star: float | None = None
    v_infinity: float | None = None
    onset: int | None = None


#: reference values, rounded to three decimals
GOLDEN = {
    "I": Golden(n_star=math.inf, v_infinity=84.675),
    "II": Golden(n_star=95, v_at_star=59.965),
    "III": Golden(n_star=73, v_at_star=55.627),
    "IV": Golden(n_star=58, v_at_star=50.979),
    "V": Golden(n_star=math.inf, v_infinity=math.inf),
    "VI": Golden(v_infinity=41.688, onset=281),
    "VII": Golden(n_star=117, v_infinity=-math.inf),
    "VIII": Golden(n_star=54, v_at_star=55.182, v_infinity=-math.inf),
}
VALUE_TOL = 1e-3
ONSET_TOL = 2


# -- formatting ----------------------------------------------------------------

def fmt(x, precision: int = 6) -> str:
    """Locale-independent number formatting; ``None`` becomes an empty cell."""
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    if precision >= 17:
        return repr(x)
    return f"{x:.{precision}g}"


def to_csv(header, rows, precision: int = 6) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([c if isinstance(c, str) else fmt(c, precision) for c in row])
    return buf.getvalue()


# -- config --------------------------------------------------------------------

def _key_line(text: str, section: str, key: str) -> int | None:
    current = None
    for i, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        m = re.match(r"\[(.+)\]$", s)
        if m:
            current = m.group(1).strip()
        elif current == section and re.match(rf"{re.escape(key)}\s*[=:]", s, re.IGNORECASE):
            return i
    return None


def parse_config(text: str, source: str = "<config>") -> list[Scenario]:
    """Scenarios from INI-style text, one section per scenario.

    ``theta = unit_dual`` picks the upper root of ``A Theta = 1`` and
    ``A = inv_beta`` sets ``A = 1/beta``.
    """
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text, source=source)
    except configparser.Error as e:
        raise ConfigError(f"{source}: {e}") from e
    out = []
    for name in cp.sections():
        sec = cp[name]

        def where(key):
            line = _key_line(text, name, key)
            return f"{source}:{line}" if line else source

        for key in sec:
            if key not in CONFIG_KEYS:
                raise ConfigError(f"{where(key)}: unknown key {key!r} in [{name}]")

        def num(key, conv=float, default=None):
            if key not in sec:
                return default
            try:
                return conv(sec[key])
            except ValueError:
                raise ConfigError(f"{where(key)}: bad value {sec[key]!r} for {key}") from None

        for key in ("beta", "theta", "k0"):
            if key not in sec:
                raise ConfigError(f"{source}: [{name}] is missing {key!r}")
        if "A" not in sec:
            raise ConfigError(f"{source}: [{name}] is missing 'A'")
        beta = num("beta")
        A = 1.0 / beta if sec["A"].strip() == "inv_beta" else num("A")
        theta = theta_for_unit_dual(A) if sec["theta"].strip() == "unit_dual" else num("theta")
        try:
            params = ModelParams(A, beta, theta, num("k0"), num("s", default=1e-9))
        except DynastyError as e:
            raise ConfigError(f"{source}: [{name}] {e}") from e
        n = num("n", int)
        n_range = None
        if "n_from" in sec or "n_to" in sec:
            if "n_from" not in sec or "n_to" not in sec:
                raise ConfigError(f"{where('n_from')}: [{name}] needs both n_from and n_to")
            n_range = (num("n_from", int), num("n_to", int), num("stride", int, 1))
        out.append(Scenario(name, params, n, n_range, num("eps", default=0.5e-3)))
    return out


def load_config(path) -> list[Scenario]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e
    return parse_config(text, str(path))


# -- table ---------------------------------------------------------------------

TABLE_HEADER = [
    "case", "A", "beta", "theta", "log_A_beta", "log_A_Theta",
    "n_star", "V_at_star", "V_infinity", "plateau_onset",
]


def solve_scenario(sc: Scenario) -> HorizonSolution:
    return find_optimal_horizon(sc.params, plateau_eps=sc.eps)


def table_rows(scenarios) -> list[tuple[Scenario, HorizonSolution]]:
    return [(sc, solve_scenario(sc)) for sc in scenarios]


def table_csv(solved, precision: int = 6) -> str:
    rows = []
    for sc, sol in solved:
        p = sc.params
        rows.append([
            sc.name, p.A, p.beta, p.theta, log_a_beta(p), log_a_theta(p),
            sol.n_star if sol.is_infinite else int(sol.n_star),
            sol.v_at_star, sol.v_infinity, sol.plateau_onset,
        ])
    return to_csv(TABLE_HEADER, rows, precision)


def golden_mismatches(solved) -> list[str]:
    """Cells that disagree with :data:`GOLDEN`; cases without goldens are skipped."""
    bad = []

    def close(a, b):
        if a is None:
            return False
        if math.isinf(b):
            return a == b
        return abs(a - b) <= VALUE_TOL

    for sc, sol in solved:
        g = GOLDEN.get(sc.name)
        if g is None:
            continue
        if g.n_star is not None and sol.n_star != g.n_star:
            bad.append(f"{sc.name}.n_star: expected {fmt(g.n_star)}, got {fmt(sol.n_star)}")
        if g.v_at_star is not None and not close(sol.v_at_star, g.v_at_star):
            bad.append(f"{sc.name}.V_at_star: expected {g.v_at_star}, got {fmt(sol.v_at_star, 8)}")
        if g.v_infinity is not None and not close(sol.v_infinity, g.v_infinity):
            bad.append(f"{sc.name}.V_infinity: expected {fmt(g.v_infinity)}, got {fmt(sol.v_infinity, 8)}")
        if g.onset is not None and (sol.plateau_onset is None or abs(sol.plateau_onset - g.onset) > ONSET_TOL):
            bad.append(f"{sc.name}.plateau_onset: expected {g.onset}±{ONSET_TOL}, got {fmt(sol.plateau_onset)}")
    return bad


# -- trajectories and curves ---------------------------------------------------

SOLVE_HEADER = ["t", "c_t", "k_t", "log_c_t", "discounted_contrib"]


def solve_csv(sc: Scenario, precision: int = 6) -> str:
    n = sc.n
    if n is None:
        sol = solve_scenario(sc)
        if sol.is_infinite:
            raise DynastyError(f"{sc.name}: the optimal horizon is infinite; pass a fixed n")
        n = int(sol.n_star)
    tr = optimal_consumption_path(sc.params, n)
    disc = np.power(sc.params.beta, tr.t) * tr.contrib
    rows = [[int(t), tr.c[t], tr.k[t], tr.contrib[t], disc[t]] for t in tr.t]
    rows.append([n + 1, "", tr.k[n + 1], "", ""])
    return to_csv(SOLVE_HEADER, rows, precision)


def curves(sc: Scenario, out_dir, lorenz_ns=(), precision: int = 6, denominator: str = "paper"):
    """Write value, Gini and Lorenz CSVs plus one SVG per series; returns paths."""
    if sc.n_range is None:
        raise ConfigError(f"scenario {sc.name!r} has no n_from/n_to range")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    n_from, n_to, stride = sc.n_range
    written = []

    def put(name, text):
        path = out / name
        path.write_text(text)
        written.append(path)

    vc = value_curve(sc.params, n_from, n_to, stride)
    put("value_curve.csv", to_csv(["n", "V"], zip(vc.n.tolist(), vc.v), precision))
    put("value_curve.svg", svg.line_chart([(sc.name, vc.n, vc.v)], f"V[n], {sc.name}", "n", "V[n]"))

    gc = gini_curve(sc.params, max(1, n_from), max(1, n_to), stride, denominator)
    put("gini_curve.csv", to_csv(["n", "G"], zip(gc.n.tolist(), gc.g), precision))
    put("gini_curve.svg", svg.line_chart([(sc.name, gc.n, gc.g)], f"Gini index, {sc.name}", "n", "G[n]"))

    ns = list(lorenz_ns) or sorted({n_from, n_to})
    series = []
    for n in ns:
        lc = lorenz(optimal_consumption_path(sc.params, int(n)).c)
        put(f"lorenz_n{int(n):03d}.csv", to_csv(["p", "q"], zip(lc.p, lc.q), precision))
        series.append((f"n={int(n)}", lc.p, lc.q))
    series.append(("equality", [0, 1], [0, 1]))
    put("lorenz.svg", svg.line_chart(series, f"Lorenz curves, {sc.name}", "population share", "consumption share"))
    return written


# -- verification ----------------------------------------------------------------

@dataclass
class Family:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    worst: float = 0.0

    def check(self, ok: bool, what: str, err: float = 0.0):
        self.checks += 1
        self.worst = max(self.worst, float(err))
        if not ok:
            self.failures.append(what)

    def as_dict(self):
        return {
            "passed": not self.failures,
            "checks": self.checks,
            "worst": fmt(self.worst, 6),
            "failures": self.failures[:20],
        }


def random_params(rng: np.random.Generator) -> ModelParams:
    return ModelParams(
        A=rng.uniform(0.9, 1.2), beta=rng.uniform(0.8, 1.0),
        theta=rng.uniform(0.8, 1.0), k0=rng.uniform(1.0, 200.0),
    )


def verify(depth: str = "quick", seed: int = 0) -> dict:
    """Run the invariant families; the report is deterministic for a seed."""
    if depth not in ("quick", "full"):
        raise ValueError(f"depth must be 'quick' or 'full', got {depth!r}")
    full = depth == "full"
    rng = np.random.default_rng(seed)
    draws = [random_params(rng) for _ in range(20 if full else 10)]
    fams = {}

    f = fams["oracle_equivalence"] = Family("oracle_equivalence")
    for i, p in enumerate(draws):
        for n in range(6 if full else 3):
            v = optimal_consumption_path(p, n).value
            o = brute_force_value(p, n, 800)
            rel = abs(o.value - v) / max(abs(v), 1e-300)
            f.check(rel <= 1e-4, f"draw {i} n={n}: rel {rel:.3g}", rel)

    f = fams["direct_search_c0"] = Family("direct_search_c0")
    for i, p in enumerate(draws):
        for n in range(4 if full else 3):
            c0 = initial_consumption(p, n)
            d = direct_search(p, n)
            rel = abs(d.c0 - c0) / c0
            f.check(rel <= 1e-3, f"draw {i} n={n}: rel {rel:.3g}", rel)

    f = fams["trajectory_invariants"] = Family("trajectory_invariants")
    for i, p in enumerate(draws):
        for n in (0, 1, 5, 50, 500):
            tr = optimal_consumption_path(p, n)
            nxt = p.A * tr.k[:-1] ** p.theta - tr.c
            rel = float(np.max(np.abs(nxt[:-1] - tr.k[1:-1]) / tr.k[1:-1])) if n else 0.0
            f.check(rel <= 1e-9, f"draw {i} n={n}: budget {rel:.3g}", rel)
            f.check(tr.k[-1] == 0.0 and np.all(tr.c > 0) and np.all(tr.k[:-1] > 0),
                    f"draw {i} n={n}: terminal/positivity")

    f = fams["ak_linearity"] = Family("ak_linearity")
    for name in ("I", "II", "III", "IV"):
        p = builtin_cases()[name].params
        for n in (10, 200, 600):
            d = np.diff(optimal_consumption_path(p, n).contrib)
            err = float(np.max(np.abs(d - math.log(p.A * p.beta))))
            f.check(err <= 1e-12, f"case {name} n={n}: slope err {err:.3g}", err)

    f = fams["initial_consumption_monotone"] = Family("initial_consumption_monotone")
    for i, p in enumerate(draws):
        ns = np.arange(10**4 + 1)
        d = np.diff(initial_consumption(p, ns))
        # strict only while the decrement is resolvable in double precision
        resolvable = p.bt ** (ns[:-1] + 1.0) > 1e-13
        ok = np.all(d <= 0) and np.all(d[resolvable] < 0)
        f.check(bool(ok), f"draw {i}: not strictly decreasing")

    f = fams["gini_invariance"] = Family("gini_invariance")
    for i in range(10):
        c = rng.uniform(0.1, 10.0, size=int(rng.integers(2, 200)))
        g = gini(c)
        brute = np.abs(c[:, None] - c[None, :]).sum() / (2 * (c.size - 1) * c.sum())
        f.check(abs(g - brute) <= 1e-12, f"stream {i}: double sum", abs(g - brute))
        f.check(abs(gini(3.7 * c) - g) <= 1e-12, f"stream {i}: scale")
        f.check(abs(gini(rng.permutation(c)) - g) <= 1e-12, f"stream {i}: permutation")

    f = fams["foc_sign"] = Family("foc_sign")
    for name in ("I", "II", "III", "IV"):
        p = builtin_cases()[name].params
        coef = ak.foc_coefficients(p)
        for n in np.linspace(0.5, 1000.0, 200 if full else 40):
            h = 1e-3
            fd = (ak.ak_value(p, n + h) - ak.ak_value(p, n - h)) / (2 * h)
            an = float(coef.dvdn(n))
            ok = abs(an) < 1e-8 or np.sign(fd) == np.sign(an)
            rel = abs(fd - an) / abs(an) if abs(an) > 1e-4 else 0.0
            f.check(ok and rel <= 1e-6, f"case {name} n={n:.4g}: fd {fd:.6g} vs {an:.6g}", rel)

    if full:
        f = fams["table_goldens"] = Family("table_goldens")
        for msg in golden_mismatches(table_rows(builtin_cases().values())):
            f.check(False, msg)
        f.checks = max(f.checks, 1)

    return {
        "depth": depth,
        "seed": seed,
        "passed": all(not fam.failures for fam in fams.values()),
        "families": {k: v.as_dict() for k, v in fams.items()},
    }


def verify_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def phase_label(p: ModelParams) -> str:
    ph = classify_phase(p)
    sign = ph.boundary_sign
    if isinstance(sign, tuple):
        return f"{ph.regime.value}({sign[0].value},{sign[1].value})"
    return f"{ph.regime.value}({sign.value})"
