"""Eigenstructure and matrix powers of the 2x2 transition matrix.

The transition matrix always has eigenvalue 1 with eigenvector (1, 1).
The second eigenvalue is ``lambda2 = 1 - gamma*(alpha + beta)``, with
eigenvector ``(-alpha, beta)``. When ``alpha + beta == 0`` both eigenvalues
are 1 and the matrix is defective. Its powers then come from a 2x2 Jordan
block and grow linearly in ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ModelParams, State

DEFAULT_BRANCH_EPSILON = 1e-12


@dataclass(frozen=True)
class Mat2:
    """Row-major real 2x2 matrix."""

    m11: float
    m12: float
    m21: float
    m22: float

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1.0, 0.0, 0.0, 1.0)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def apply(self, s: State) -> State:
        return State(self.m11 * s.a + self.m12 * s.b, self.m21 * s.a + self.m22 * s.b)

    def mul_vec(self, v: tuple[float, float]) -> tuple[float, float]:
        x, y = v
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)

    def entries(self) -> tuple[float, float, float, float]:
        return (self.m11, self.m12, self.m21, self.m22)

    def rows(self) -> list[list[float]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]


@dataclass(frozen=True)
class Spectrum:
    """Eigenpairs of the transition matrix.

    ``v2`` is ``(-alpha, beta)``, which is proportional to ``(-alpha/beta, 1)``
    but stays defined when ``beta == 0``.
    """

    lambda1: float
    lambda2: float
    v1: tuple[float, float]
    v2: tuple[float, float]
    diagonalizable: bool


def transition_matrix(params: ModelParams) -> Mat2:
    ag = params.alpha_gamma
    bg = params.beta_gamma
    return Mat2(1.0 - ag, ag, bg, 1.0 - bg)


def spectrum(params: ModelParams, epsilon: float = DEFAULT_BRANCH_EPSILON) -> Spectrum:
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    return Spectrum(
        lambda1=1.0,
        lambda2=params.lambda2,
        v1=(1.0, 1.0),
        v2=(-params.alpha, params.beta),
        diagonalizable=abs(params.alpha + params.beta) > epsilon,
    )


def int_power(x: float, n: int) -> float:
    """``x**n`` for integer ``n >= 0`` by binary exponentiation.

    Exact whenever every intermediate product is representable, in
    particular for ``x`` in {-1, 0, 1}.
    """
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    result = 1.0
    base = x
    while n:
        if n & 1:
            result *= base
        n >>= 1
        if n:
            base *= base
    return result


def _check_t(t: int) -> None:
    if isinstance(t, bool) or not isinstance(t, int) or t < 0:
        raise ValueError(f"t must be a non-negative integer, got {t!r}")


def jordan_power(params: ModelParams, t: int) -> Mat2:
    """``M**t`` for the defective case ``alpha + beta == 0``.

    With ``M = S J S^-1`` and ``J**t = [[1, t], [0, 1]]`` this is
    ``I + t*(M - I)``. The (2,2) entry is ``1 + t*alpha*gamma``.
    """
    _check_t(t)
    k = t * params.alpha_gamma
    return Mat2(1.0 - k, k, -k, 1.0 + k)


def power_and_geometric_sum(x: float, n: int) -> tuple[float, float]:
    """``(x**n, 1 + x + ... + x**(n-1))`` by binary doubling over the bits of ``n``.

    Doubling uses ``S(2k) = S(k) * (1 + x**k)`` and increment uses
    ``S(k+1) = 1 + x * S(k)``; no division, so ``x`` near 1 is harmless.
    """
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    p, s = 1.0, 0.0
    for bit in bin(n)[2:]:
        s = s * (1.0 + p)
        p = p * p
        if bit == "1":
            s = 1.0 + x * s
            p = p * x
    return p, s


def eigen_power(params: ModelParams, t: int) -> Mat2:
    """``M**t = Q diag(1, lambda2**t) Q^-1`` for the diagonalizable case.

    Entry-wise this is ``(beta + alpha*lambda2**t)/(alpha + beta)`` etc.; the
    shared factor ``(1 - lambda2**t)/(alpha + beta)`` equals
    ``gamma * sum(lambda2**k for k < t)``, which is evaluated directly so that
    nothing is divided by a small ``alpha + beta``.
    """
    _check_t(t)
    _, g = power_and_geometric_sum(params.lambda2, t)
    ka = params.alpha_gamma * g
    kb = params.beta_gamma * g
    return Mat2(1.0 - ka, ka, kb, 1.0 - kb)


def eigen_power_direct(params: ModelParams, t: int) -> Mat2:
    """Eigendecomposition form written out literally; loses digits as ``alpha + beta -> 0``."""
    _check_t(t)
    alpha, beta = params.alpha, params.beta
    s = alpha + beta
    lt = int_power(params.lambda2, t)
    return Mat2(
        (beta + alpha * lt) / s,
        (alpha - alpha * lt) / s,
        (beta - beta * lt) / s,
        (alpha + beta * lt) / s,
    )


def matrix_power_closed(params: ModelParams, t: int, epsilon: float = DEFAULT_BRANCH_EPSILON) -> Mat2:
    """Closed-form ``M**t``: the eigendecomposition if ``|alpha+beta| > epsilon``, else the Jordan form."""
    if abs(params.alpha + params.beta) > epsilon:
        return eigen_power(params, t)
    return jordan_power(params, t)


def matrix_power_iterative(params: ModelParams, t: int) -> Mat2:
    """``M**t`` by ``t`` left-multiplications of the identity by ``M``.

    Independent of the closed forms; used as their oracle.
    """
    _check_t(t)
    m = transition_matrix(params)
    p = Mat2.identity()
    for _ in range(t):
        p = m @ p
    return p


def state_at(params: ModelParams, initial: State, t: int, epsilon: float = DEFAULT_BRANCH_EPSILON) -> State:
    """State after ``t`` steps, evaluated in closed form."""
    return matrix_power_closed(params, t, epsilon).apply(initial)


def eigen_residuals(params: ModelParams) -> tuple[float, float]:
    """Max-norm residuals ``|M v1 - v1|`` and ``|M v2 - lambda2 v2|``."""
    m = transition_matrix(params)
    sp = spectrum(params)
    mv1 = m.mul_vec(sp.v1)
    mv2 = m.mul_vec(sp.v2)
    r1 = max(abs(mv1[0] - sp.v1[0]), abs(mv1[1] - sp.v1[1]))
    r2 = max(abs(mv2[0] - sp.lambda2 * sp.v2[0]), abs(mv2[1] - sp.lambda2 * sp.v2[1]))
    return r1, r2
