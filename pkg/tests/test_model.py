import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affinity_dynamics import (
    DegenerateModel,
    GammaNotPositive,
    ModelParams,
    NonFiniteInput,
    State,
    power,
    simulate,
    step,
    validate_params,
)
from affinity_dynamics.model import conserved_quantity

from conftest import marginal_params, params, states


def matmul_step(p, s):
    """Oracle: explicit 2x2 matrix times column vector."""
    m = [[1 - p.alpha * p.gamma, p.alpha * p.gamma], [p.beta * p.gamma, 1 - p.beta * p.gamma]]
    v = [s.a, s.b]
    return State(*(sum(m[i][j] * v[j] for j in range(2)) for i in range(2)))


def test_validate_ok():
    p = validate_params(1.0, 0.5, 1.0)
    assert (p.alpha, p.beta, p.gamma) == (1.0, 0.5, 1.0)


@pytest.mark.parametrize(
    "args, exc",
    [
        ((0.0, 0.0, 1.0), DegenerateModel),
        ((1.0, 1.0, 0.0), GammaNotPositive),
        ((1.0, 1.0, -2.0), GammaNotPositive),
        ((math.nan, 1.0, 1.0), NonFiniteInput),
        ((1.0, math.inf, 1.0), NonFiniteInput),
        ((1.0, 1.0, math.inf), NonFiniteInput),
        (("1", 1.0, 1.0), NonFiniteInput),
    ],
)
def test_validate_errors(args, exc):
    with pytest.raises(exc):
        validate_params(*args)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        validate_params(0, 0, 1)


def test_params_are_immutable():
    p = validate_params(1.0, 0.5, 1.0)
    with pytest.raises(AttributeError):
        p.alpha = 2.0


def test_state_rejects_non_finite():
    with pytest.raises(NonFiniteInput):
        State(math.inf, 0.0)


def test_power():
    assert power(ModelParams(1, 1, 2), State(1, 4)) == 6
    assert power(ModelParams(1, -1, 1), State(0, 1)) == 1


@given(params(), st.floats(-100, 100))
def test_power_zero_on_diagonal(p, c):
    assert power(p, State(c, c)) == 0


def test_step_examples(p_swap):
    assert step(p_swap, State(0, 2)) == State(2, 0)
    assert matmul_step(p_swap, State(0, 2)) == State(2, 0)
    assert step(ModelParams(0.5, 0.5, 1), State(0, 10)) == State(5, 5)


@given(params(), st.floats(-1e6, 1e6))
def test_step_fixed_point(p, c):
    assert step(p, State(c, c)) == State(c, c)


@given(params(), states)
def test_step_matches_matrix_oracle(p, s):
    got, ref = step(p, s), matmul_step(p, s)
    scale = (abs(s.a) + abs(s.b)) * (1 + abs(p.alpha_gamma) + abs(p.beta_gamma))
    assert abs(got.a - ref.a) <= 1e-14 * scale
    assert abs(got.b - ref.b) <= 1e-14 * scale


@given(params(), states)
def test_step_matches_power_form(p, s):
    pw = power(p, s)
    ref = State(s.a + p.alpha * pw, s.b - p.beta * pw)
    got = step(p, s)
    scale = abs(s.a) + abs(s.b) + abs(pw) * (abs(p.alpha) + abs(p.beta))
    assert abs(got.a - ref.a) <= 1e-14 * scale + 1e-300
    assert abs(got.b - ref.b) <= 1e-14 * scale + 1e-300


def test_simulate_period_two(p_swap):
    traj = simulate(p_swap, State(0, 2), 4)
    assert [s.as_tuple() for s in traj.states] == [(0, 2), (2, 0), (0, 2), (2, 0), (0, 2)]
    assert not traj.truncated


def test_simulate_one_step_collapse():
    traj = simulate(ModelParams(0.5, 0.5, 1), State(0, 10), 3)
    assert [s.as_tuple() for s in traj.states] == [(0, 10), (5, 5), (5, 5), (5, 5)]


def test_simulate_linear_growth():
    traj = simulate(ModelParams(1, -1, 1), State(0, 1), 3)
    assert [s.as_tuple() for s in traj.states] == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_simulate_truncates():
    # gap doubles each step; first state with max(|a|,|b|) > 1e12 is t = 41
    traj = simulate(ModelParams(-0.5, -0.5, 1), State(0, 1), 100)
    assert traj.truncated_at == 41
    assert len(traj) == 42
    assert max(abs(traj.final.a), abs(traj.final.b)) > 1e12
    assert max(abs(traj[40].a), abs(traj[40].b)) <= 1e12


def test_simulate_initial_over_threshold():
    traj = simulate(ModelParams(1, 1, 1), State(0, 10), 5, divergence_threshold=5)
    assert traj.truncated_at == 0
    assert len(traj) == 1


@pytest.mark.parametrize("steps", [0, -1, 1.5, True])
def test_simulate_rejects_bad_steps(steps):
    with pytest.raises(ValueError):
        simulate(ModelParams(1, 1, 1), State(0, 1), steps)


@given(params(), states, st.integers(1, 60))
def test_trajectory_is_iterated_step(p, s, n):
    traj = simulate(p, s, n)
    assert traj.states[0] == s
    for x, y in zip(traj.states, traj.states[1:]):
        assert step(p, x) == y
    expected_len = n + 1 if traj.truncated_at is None else traj.truncated_at + 1
    assert len(traj) == expected_len


@given(params(), states)
def test_gap_recurrence(p, s):
    nxt = step(p, s)
    gap, gap_next = s.b - s.a, nxt.b - nxt.a
    # 1e-12 relative to the state magnitude; the gap itself can cancel
    assert abs(gap_next - p.lambda2 * gap) <= 1e-12 * max(abs(s.a) + abs(s.b), abs(gap), 1e-300)


@given(marginal_params(), states)
def test_conserved_quantity(p, s):
    traj = simulate(p, s, 1000)
    q0 = conserved_quantity(p, s)
    scale = abs(p.beta * s.a) + abs(p.alpha * s.b)
    for x in traj.states:
        assert abs(conserved_quantity(p, x) - q0) <= 1e-9 * max(abs(q0), scale, 1e-300)


def test_conserved_quantity_exact_on_period_two_orbit():
    # lambda2 = -1 with dyadic entries: every state is exactly representable
    p = ModelParams(1.5, 0.5, 1.0)
    traj = simulate(p, State(3.0, -5.0), 200)
    assert {conserved_quantity(p, x) for x in traj.states} == {conserved_quantity(p, State(3.0, -5.0))}
    assert {x.as_tuple() for x in traj.states} == {(3.0, -5.0), (-9.0, -1.0)}


@given(params(), states)
def test_gamma_rescaling(p, s):
    q = ModelParams(p.alpha * p.gamma, p.beta * p.gamma, 1.0)
    t1 = simulate(p, s, 100)
    t2 = simulate(q, s, 100)
    assert len(t1) == len(t2)
    for x, y in zip(t1.states, t2.states):
        assert abs(x.a - y.a) <= 1e-12 * max(1.0, abs(x.a))
        assert abs(x.b - y.b) <= 1e-12 * max(1.0, abs(x.b))
