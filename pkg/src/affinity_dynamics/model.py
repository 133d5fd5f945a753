"""Parameters, state and forward simulation of the two-player affinity/power system.

Player A's power is ``P = gamma * (b - a)``. One step moves A toward
B at rate ``alpha * gamma`` and B toward A at rate ``beta * gamma``:

    a' = a * (1 - alpha*gamma) + alpha*gamma * b  =  a + alpha*gamma * (b - a)
    b' = b * (1 - beta*gamma)  + beta*gamma  * a  =  b - beta*gamma  * (b - a)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import DegenerateModel, GammaNotPositive, NonFiniteInput

DEFAULT_DIVERGENCE_THRESHOLD = 1e12


@dataclass(frozen=True)
class ModelParams:
    """Validated ``(alpha, beta, gamma)`` triple.

    Attributes:
        alpha: Power sensitivity of player A. Positive means A is dominant
            (prefers more power), negative means submissive.
        beta: Power sensitivity of player B, same convention.
        gamma: Gain converting the affinity gap into power. Must be > 0.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise NonFiniteInput(f"{name} must be a real number, got {value!r}")
            if not math.isfinite(value):
                raise NonFiniteInput(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.gamma <= 0:
            raise GammaNotPositive(f"gamma must be > 0, got {self.gamma!r}")
        if self.alpha == 0 and self.beta == 0:
            raise DegenerateModel("degenerate model: alpha = beta = 0, power has no effect")

    @property
    def alpha_gamma(self) -> float:
        return self.alpha * self.gamma

    @property
    def beta_gamma(self) -> float:
        return self.beta * self.gamma

    @property
    def lambda2(self) -> float:
        """The non-unit eigenvalue ``1 - alpha*gamma - beta*gamma``."""
        return 1.0 - self.alpha_gamma - self.beta_gamma


@dataclass(frozen=True)
class State:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise NonFiniteInput(f"state components must be finite, got ({self.a!r}, {self.b!r})")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    def as_tuple(self) -> tuple[float, float]:
        return (self.a, self.b)


@dataclass(frozen=True)
class Trajectory:
    """States ``t = 0..T`` of one run.

    ``truncated_at`` is the index of the first state whose largest
    component exceeded the divergence threshold, or ``None`` if the run
    completed all requested steps. That state is kept as the last entry.
    """

    params: ModelParams
    initial: State
    states: tuple[State, ...]
    truncated_at: Optional[int] = field(default=None)

    @property
    def truncated(self) -> bool:
        return self.truncated_at is not None

    def __len__(self) -> int:
        return len(self.states)

    def __getitem__(self, t: int) -> State:
        return self.states[t]

    @property
    def final(self) -> State:
        return self.states[-1]


def validate_params(alpha: float, beta: float, gamma: float) -> ModelParams:
    """Build a :class:`ModelParams`, raising a :class:`ModelError` subclass if invalid."""
    return ModelParams(alpha, beta, gamma)


def power(params: ModelParams, s: State) -> float:
    """Power held by player A in state ``s``; B holds the negation."""
    return params.gamma * (s.b - s.a)


def step(params: ModelParams, s: State) -> State:
    # Gap form is the one canonical evaluation order: states with a == b are
    # returned bit-for-bit, which the matrix form does not guarantee.
    gap = s.b - s.a
    return State(s.a + params.alpha_gamma * gap, s.b - params.beta_gamma * gap)


def simulate(
    params: ModelParams,
    initial: State,
    steps: int,
    divergence_threshold: float = DEFAULT_DIVERGENCE_THRESHOLD,
) -> Trajectory:
    """Iterate :func:`step` up to ``steps`` times.

    The run stops early at the first state with ``max(|a|, |b|)`` above
    ``divergence_threshold``; that state is recorded and its index stored in
    ``truncated_at``. Stopping early is not an error.
    """
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps!r}")
    if not divergence_threshold > 0:
        raise ValueError(f"divergence_threshold must be positive, got {divergence_threshold!r}")

    states = [initial]
    if max(abs(initial.a), abs(initial.b)) > divergence_threshold:
        return Trajectory(params, initial, tuple(states), truncated_at=0)

    s = initial
    for t in range(1, steps + 1):
        s = step(params, s)
        states.append(s)
        if max(abs(s.a), abs(s.b)) > divergence_threshold:
            return Trajectory(params, initial, tuple(states), truncated_at=t)
    return Trajectory(params, initial, tuple(states))


def conserved_quantity(params: ModelParams, s: State) -> float:
    """``beta*a + alpha*b``, invariant along every trajectory."""
    return params.beta * s.a + params.alpha * s.b
