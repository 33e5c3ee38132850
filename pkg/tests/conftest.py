import numpy as np
import pytest
from hypothesis import strategies as st

from qubit_thermometry.channel import ProbePair, coefficients

ACCEPTANCE_LINES = []


@pytest.fixture
def ref_pair():
    return ProbePair(12.0, 20.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20140527)


occupancies = st.floats(min_value=1.0, max_value=60.0, allow_nan=False)
gaps = st.floats(min_value=0.05, max_value=60.0, allow_nan=False)
times = st.floats(min_value=0.0, max_value=5.0, allow_nan=False)


@st.composite
def pairs(draw, n1=occupancies):
    a = draw(n1)
    return ProbePair(a, a + draw(gaps))


def random_pair(rng, n1_low=1.0, n1_high=40.0):
    n1 = rng.uniform(n1_low, n1_high)
    return ProbePair(n1, n1 + rng.uniform(0.05, 40.0))


def random_bloch(rng, pure=True):
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    return v if pure else v * rng.uniform(0, 1)


def displayed_difference(pair, t):
    """The phi+ difference matrix in its conventional (ground-first, ancilla-first) layout."""
    a, b, c = coefficients(pair, t)
    return 0.25 * np.array(
        [
            [b + c, 0, 0, 2 * a],
            [0, -(b + c), 0, 0],
            [0, 0, c - b, 0],
            [2 * a, 0, 0, -(c - b)],
        ]
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
