import numpy as np
import pytest
from hypothesis import strategies as st

from dynasty import ModelParams
from dynasty.report import builtin_cases


@pytest.fixture(scope="session")
def cases():
    return {k: sc.params for k, sc in builtin_cases().items()}


def params_strategy(beta=(0.8, 1.0), theta=(0.8, 1.0), A=(0.9, 1.2), k0=(1.0, 200.0)):
    return st.builds(
        ModelParams,
        A=st.floats(*A),
        beta=st.floats(*beta, exclude_min=True),
        theta=st.floats(*theta, exclude_min=True),
        k0=st.floats(*k0),
    )


def random_params(seed, n=20):
    rng = np.random.default_rng(seed)
    return [
        ModelParams(rng.uniform(0.9, 1.2), rng.uniform(0.8, 1.0), rng.uniform(0.8, 1.0), rng.uniform(1, 200))
        for _ in range(n)
    ]


#: one line per acceptance criterion, filled by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
