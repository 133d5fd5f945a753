"""Stability classes, dominance archetypes and asymptotic fates.

Every class boundary is decided on ``lambda2`` with one tolerance, so the
spectral and behavioral labels can never contradict each other:

    |lambda2 - 1| <= eps   -> linearly divergent      (alpha + beta = 0)
    |lambda2 + 1| <= eps   -> period-two oscillation  (alpha + beta = 2/gamma)
    lambda2 > 1            -> geometrically divergent
    lambda2 < -1           -> geometrically alternating
    otherwise              -> convergent
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import NotConvergent, NotOscillatory, TrivialOrbit
from .model import ModelParams, State, step

DEFAULT_EPSILON = 1e-9


class SpectralClass(str, enum.Enum):
    MARGINALLY_STABLE = "marginally_stable"
    UNSTABLE = "unstable"


class BehavioralClass(str, enum.Enum):
    CONVERGENT = "convergent"
    PERIOD_TWO = "period_two"
    LINEARLY_DIVERGENT = "linearly_divergent"
    GEOMETRICALLY_DIVERGENT = "geometrically_divergent"
    GEOMETRICALLY_ALTERNATING = "geometrically_alternating"


class Stance(str, enum.Enum):
    DOMINANT = "dominant"
    SUBMISSIVE = "submissive"
    NEUTRAL = "neutral"


class CaseLabel(str, enum.Enum):
    BOTH_DOMINANT = "both_dominant"
    BOTH_SUBMISSIVE = "both_submissive"
    A_DOMINANT_B_SUBMISSIVE = "a_dominant_b_submissive"
    B_DOMINANT_A_SUBMISSIVE = "b_dominant_a_submissive"
    MIXED_WITH_NEUTRAL = "mixed_with_neutral"


@dataclass(frozen=True)
class Archetype:
    stance_a: Stance
    stance_b: Stance
    case_label: CaseLabel


class LimitKind(str, enum.Enum):
    FINITE = "finite"
    PLUS_INFINITY = "+inf"
    MINUS_INFINITY = "-inf"
    ALTERNATING = "alt"
    # finite two-point orbit (only for period-two oscillation)
    ORBIT = "orbit"


@dataclass(frozen=True)
class Limit:
    kind: LimitKind
    value: Optional[float] = None

    @classmethod
    def finite(cls, value: float) -> "Limit":
        return cls(LimitKind.FINITE, value)

    @classmethod
    def infinite(cls, sign: int) -> "Limit":
        if sign > 0:
            return cls(LimitKind.PLUS_INFINITY)
        if sign < 0:
            return cls(LimitKind.MINUS_INFINITY)
        raise ValueError("infinite limit needs a non-zero sign")

    @property
    def is_finite(self) -> bool:
        return self.kind is LimitKind.FINITE

    def to_json(self):
        if self.kind is LimitKind.FINITE:
            return self.value
        return self.kind.value


ALTERNATING = Limit(LimitKind.ALTERNATING)
ORBIT = Limit(LimitKind.ORBIT)


@dataclass(frozen=True)
class Fate:
    """Long-run behaviour of each player from a given initial state.

    ``orbit_points`` is set only for a period-two oscillation; a player whose
    coordinate is the same at both orbit points gets a finite limit, the
    other gets ``LimitKind.ORBIT``.
    """

    a_limit: Limit
    b_limit: Limit
    period: int = 1
    orbit_points: Optional[tuple[State, State]] = None


@dataclass(frozen=True)
class ClassificationReport:
    params: ModelParams
    lambda2: float
    spectral: SpectralClass
    behavioral: BehavioralClass
    archetype: Archetype
    fate: Optional[Fate] = None
    equilibrium: Optional[State] = None


def _sign(x: float, epsilon: float) -> int:
    if x > epsilon:
        return 1
    if x < -epsilon:
        return -1
    return 0


def classify_stability(
    params: ModelParams, epsilon: float = DEFAULT_EPSILON
) -> tuple[SpectralClass, BehavioralClass]:
    lam = params.lambda2
    spectral = SpectralClass.MARGINALLY_STABLE if abs(lam) <= 1.0 + epsilon else SpectralClass.UNSTABLE
    if abs(lam - 1.0) <= epsilon:
        behavioral = BehavioralClass.LINEARLY_DIVERGENT
    elif abs(lam + 1.0) <= epsilon:
        behavioral = BehavioralClass.PERIOD_TWO
    elif lam > 1.0:
        behavioral = BehavioralClass.GEOMETRICALLY_DIVERGENT
    elif lam < -1.0:
        behavioral = BehavioralClass.GEOMETRICALLY_ALTERNATING
    else:
        behavioral = BehavioralClass.CONVERGENT
    return spectral, behavioral


_STANCE = {1: Stance.DOMINANT, -1: Stance.SUBMISSIVE, 0: Stance.NEUTRAL}

_CASES = {
    (Stance.DOMINANT, Stance.DOMINANT): CaseLabel.BOTH_DOMINANT,
    (Stance.SUBMISSIVE, Stance.SUBMISSIVE): CaseLabel.BOTH_SUBMISSIVE,
    (Stance.DOMINANT, Stance.SUBMISSIVE): CaseLabel.A_DOMINANT_B_SUBMISSIVE,
    (Stance.SUBMISSIVE, Stance.DOMINANT): CaseLabel.B_DOMINANT_A_SUBMISSIVE,
}


def classify_archetype(params: ModelParams, epsilon: float = DEFAULT_EPSILON) -> Archetype:
    """Dominant/submissive stance of each player, with a dead zone of width ``epsilon``."""
    sa = _STANCE[_sign(params.alpha, epsilon)]
    sb = _STANCE[_sign(params.beta, epsilon)]
    return Archetype(sa, sb, _CASES.get((sa, sb), CaseLabel.MIXED_WITH_NEUTRAL))


def _equilibrium_value(params: ModelParams, initial: State) -> float:
    return (params.beta * initial.a + params.alpha * initial.b) / (params.alpha + params.beta)


def equilibrium_limit(params: ModelParams, initial: State, epsilon: float = DEFAULT_EPSILON) -> State:
    """Point on the diagonal that a convergent trajectory approaches.

    Raises:
        NotConvergent: if ``|lambda2| >= 1 - epsilon``.
    """
    lam = params.lambda2
    if abs(lam) >= 1.0 - epsilon:
        raise NotConvergent(f"not convergent: |lambda2| = {abs(lam)!r} >= 1")
    v = _equilibrium_value(params, initial)
    return State(v, v)


def oscillation_points(
    params: ModelParams, initial: State, epsilon: float = DEFAULT_EPSILON
) -> tuple[State, State]:
    """The two states visited alternately when ``lambda2 == -1``.

    Raises:
        NotOscillatory: if ``lambda2`` is not -1 within ``epsilon``.
        TrivialOrbit: if ``initial`` is already an equilibrium.
    """
    if abs(params.lambda2 + 1.0) > epsilon:
        raise NotOscillatory(f"not oscillatory: lambda2 = {params.lambda2!r} != -1")
    a0, b0 = initial.a, initial.b
    if abs(b0 - a0) <= epsilon:
        raise TrivialOrbit("initial state is an equilibrium (a0 == b0); the orbit is a fixed point")
    alpha, beta = params.alpha, params.beta
    s = alpha + beta
    p2 = State(((beta - alpha) * a0 + 2 * alpha * b0) / s, ((alpha - beta) * b0 + 2 * beta * a0) / s)
    return initial, p2


def asymptotic_fate(params: ModelParams, initial: State, epsilon: float = DEFAULT_EPSILON) -> Fate:
    a0, b0 = initial.a, initial.b
    gap_sign = _sign(b0 - a0, epsilon)
    if gap_sign == 0:
        # P(t) = 0 forever: the initial state is a fixed point whatever the class.
        return Fate(Limit.finite(a0), Limit.finite(a0))

    _, behavioral = classify_stability(params, epsilon)
    sa = _sign(params.alpha, epsilon)
    sb = _sign(params.beta, epsilon)

    if behavioral is BehavioralClass.CONVERGENT:
        v = _equilibrium_value(params, initial)
        return Fate(Limit.finite(v), Limit.finite(v))

    if behavioral is BehavioralClass.PERIOD_TWO:
        p1, p2 = oscillation_points(params, initial, epsilon)
        a_lim = Limit.finite(a0) if abs(p2.a - p1.a) <= epsilon else ORBIT
        b_lim = Limit.finite(b0) if abs(p2.b - p1.b) <= epsilon else ORBIT
        return Fate(a_lim, b_lim, period=2, orbit_points=(p1, p2))

    if behavioral is BehavioralClass.LINEARLY_DIVERGENT:
        # alpha = -beta != 0, so sa != 0; both players head the same way.
        direction = Limit.infinite(sa * gap_sign)
        return Fate(direction, direction)

    if behavioral is BehavioralClass.GEOMETRICALLY_DIVERGENT:
        if sa == 0:
            return Fate(Limit.finite(a0), Limit.infinite(gap_sign))
        if sb == 0:
            return Fate(Limit.infinite(-gap_sign), Limit.finite(b0))
        return Fate(Limit.infinite(sa * gap_sign), Limit.infinite(-sb * gap_sign))

    # geometrically alternating
    if sa == 0:
        return Fate(Limit.finite(a0), ALTERNATING, period=2)
    if sb == 0:
        return Fate(ALTERNATING, Limit.finite(b0), period=2)
    return Fate(ALTERNATING, ALTERNATING, period=2)


def asymptotic_signs(
    params: ModelParams, initial: State, t: int, epsilon: float = DEFAULT_EPSILON
) -> tuple[int, int]:
    """Sign each player's state tends to along steps with the parity of ``t``.

    Only defined for the divergent classes. 0 marks a player that stays finite.
    For alternating divergence, an even ``t`` gives
    ``sign(alpha) * sign(a0 - b0)`` for A and ``sign(beta) * sign(b0 - a0)`` for B.
    Odd ``t`` gives the opposite signs.
    """
    fate = asymptotic_fate(params, initial, epsilon)

    def to_sign(limit: Limit, param_sign: int, gap_sign_for_even: int) -> int:
        if limit.kind is LimitKind.PLUS_INFINITY:
            return 1
        if limit.kind is LimitKind.MINUS_INFINITY:
            return -1
        if limit.kind is LimitKind.ALTERNATING:
            parity = 1 if t % 2 == 0 else -1
            return parity * param_sign * gap_sign_for_even
        if limit.kind is LimitKind.FINITE:
            return 0
        raise ValueError("asymptotic signs are undefined for a bounded orbit")

    gap = _sign(initial.b - initial.a, epsilon)
    sa = _sign(params.alpha, epsilon)
    sb = _sign(params.beta, epsilon)
    if fate.a_limit.kind is LimitKind.ALTERNATING or fate.b_limit.kind is LimitKind.ALTERNATING:
        # a single active player (the other is neutral) swings with the gap itself
        if sa == 0:
            return 0, to_sign(fate.b_limit, 1, gap)
        if sb == 0:
            return to_sign(fate.a_limit, 1, -gap), 0
    return to_sign(fate.a_limit, sa, -gap), to_sign(fate.b_limit, sb, gap)


def classify(
    params: ModelParams, initial: Optional[State] = None, epsilon: float = DEFAULT_EPSILON
) -> ClassificationReport:
    """Full report for ``params``; fate and equilibrium only when ``initial`` is given.

    ``equilibrium`` is the diagonal point ``(beta*a0 + alpha*b0)/(alpha + beta)``
    for the convergent and period-two classes (for the latter it is the
    orbit midpoint), the initial state itself when ``a0 == b0``, and
    ``None`` for the divergent classes.
    """
    spectral, behavioral = classify_stability(params, epsilon)
    report = dict(
        params=params,
        lambda2=params.lambda2,
        spectral=spectral,
        behavioral=behavioral,
        archetype=classify_archetype(params, epsilon),
    )
    if initial is None:
        return ClassificationReport(**report)

    fate = asymptotic_fate(params, initial, epsilon)
    equilibrium = None
    if _sign(initial.b - initial.a, epsilon) == 0:
        equilibrium = State(initial.a, initial.a)
    elif behavioral in (BehavioralClass.CONVERGENT, BehavioralClass.PERIOD_TWO):
        v = _equilibrium_value(params, initial)
        equilibrium = State(v, v)
    return ClassificationReport(**report, fate=fate, equilibrium=equilibrium)


def divergent_region(alpha: float, beta: float, gamma: float) -> bool:
    """Outside the marginal-stability band ``-alpha <= beta <= 2/gamma - alpha``, by direct inequality."""
    return not (-alpha <= beta <= 2.0 / gamma - alpha)
