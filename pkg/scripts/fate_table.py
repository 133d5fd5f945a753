#!/usr/bin/env python3
"""Print the asymptotic fate of each behavioral regime next to a simulation check.

For every representative parameter set the predicted limits are compared with
the last two states of a trajectory run until |state| > 1e9 (or 2000 steps).
"""
from affinity_dynamics import State, asymptotic_fate, classify_stability, simulate, validate_params

CASES = [
    ("convergent", 1.0, 0.5),
    ("period two", 1.0, 1.0),
    ("linear, alpha = -beta", 1e4, -1e4),
    ("geometric, both submissive", -0.5, -0.5),
    ("geometric, alpha = 0", 0.0, -3.0),
    ("geometric, beta = 0", -3.0, 0.0),
    ("alternating, both dominant", 1.5, 1.5),
    ("alternating, alpha = 0", 0.0, 3.0),
    ("alternating, beta = 0", 3.0, 0.0),
]


def show(limit):
    return f"{limit.value:g}" if limit.value is not None else limit.kind.value


def main():
    start = State(0.0, 1.0)
    print(f"{'regime':<28} {'class':<26} {'A':>6} {'B':>6}  last two simulated states")
    for name, alpha, beta in CASES:
        p = validate_params(alpha, beta, 1.0)
        _, behavioral = classify_stability(p)
        fate = asymptotic_fate(p, start)
        traj = simulate(p, start, 2000, divergence_threshold=1e9)
        prev, last = traj.states[-2], traj.states[-1]
        print(
            f"{name:<28} {behavioral.value:<26} {show(fate.a_limit):>6} {show(fate.b_limit):>6}  "
            f"({prev.a:.3g}, {prev.b:.3g}) -> ({last.a:.3g}, {last.b:.3g})"
        )


if __name__ == "__main__":
    main()
