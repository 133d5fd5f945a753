import hypothesis.strategies as st
import pytest
from hypothesis import settings

from affinity_dynamics import ModelParams, State

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

coeff = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
gammas = st.floats(min_value=0.1, max_value=3.0)
affinity = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def params(draw, min_sum_gap=0.0):
    """Valid params; ``min_sum_gap`` keeps ``|alpha + beta|`` away from 0."""
    a = draw(coeff)
    b = draw(coeff.filter(lambda b: abs(a + b) >= min_sum_gap and not (a == 0 and b == 0)))
    return ModelParams(a, b, draw(gammas))


@st.composite
def jordan_params(draw):
    a = draw(coeff.filter(lambda x: abs(x) > 1e-6))
    return ModelParams(a, -a, draw(gammas))


@st.composite
def marginal_params(draw):
    """Params with ``0 <= gamma*(alpha + beta) <= 2``, i.e. ``|lambda2| <= 1``."""
    g = draw(gammas)
    a = draw(coeff)
    s = draw(st.floats(min_value=0.0, max_value=2.0 / g))
    b = s - a
    if a == 0 and b == 0:
        a = 1.0
        b = -1.0
    return ModelParams(a, b, g)


states = st.builds(State, affinity, affinity)


def close(x, y, rel=1e-9, abs_=1e-9):
    return abs(x - y) <= max(rel * max(abs(x), abs(y)), abs_)


@pytest.fixture
def p_swap():
    """alpha = beta = gamma = 1: M swaps the two coordinates."""
    return ModelParams(1.0, 1.0, 1.0)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
