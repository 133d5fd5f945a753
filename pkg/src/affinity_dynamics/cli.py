"""Command-line front end.

Subcommands: classify, simulate, predict, compare, sweep.

Exit codes: 0 success, 1 comparison failed, 2 invalid input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import classifier, spectral
from .classifier import ClassificationReport, Fate
from .errors import ModelError
from .model import DEFAULT_DIVERGENCE_THRESHOLD, ModelParams, State, Trajectory, power, simulate, validate_params

EXIT_OK = 0
EXIT_COMPARE_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_IO_ERROR = 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    gamma: float
    alpha_min: float
    alpha_max: float
    beta_min: float
    beta_max: float
    alpha_steps: int
    beta_steps: int
    epsilon: float = classifier.DEFAULT_EPSILON

    def __post_init__(self):
        if not self.gamma > 0:
            raise InputError(f"gamma must be > 0, got {self.gamma!r}")
        if not self.alpha_min < self.alpha_max:
            raise InputError("alpha-min must be < alpha-max")
        if not self.beta_min < self.beta_max:
            raise InputError("beta-min must be < beta-max")
        if self.alpha_steps < 2 or self.beta_steps < 2:
            raise InputError("grid steps must be >= 2 on both axes")
        if not self.epsilon > 0:
            raise InputError("epsilon must be > 0")

    def alphas(self) -> list[float]:
        return _grid(self.alpha_min, self.alpha_max, self.alpha_steps)

    def betas(self) -> list[float]:
        return _grid(self.beta_min, self.beta_max, self.beta_steps)


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams
    initial: Optional[State] = None
    steps: int = 1
    divergence_threshold: float = DEFAULT_DIVERGENCE_THRESHOLD
    output: Optional[str] = None
    format: str = "json"


def _grid(lo: float, hi: float, n: int) -> list[float]:
    # endpoints exact; interior points lo + i*(hi - lo)/(n - 1)
    h = (hi - lo) / (n - 1)
    return [lo + i * h for i in range(n - 1)] + [hi]


def fmt(x: float) -> str:
    """Shortest round-trip decimal for ``x``."""
    return repr(float(x))


def fate_to_json(fate: Fate) -> dict:
    orbit = None
    if fate.orbit_points is not None:
        orbit = [[p.a, p.b] for p in fate.orbit_points]
    return {"a": fate.a_limit.to_json(), "b": fate.b_limit.to_json(), "period": fate.period, "orbit": orbit}


def report_to_json(report: ClassificationReport) -> dict:
    p = report.params
    return {
        "alpha": p.alpha,
        "beta": p.beta,
        "gamma": p.gamma,
        "lambda2": report.lambda2,
        "spectral_class": report.spectral.value,
        "behavioral_class": report.behavioral.value,
        "archetype": report.archetype.case_label.value,
        "stance_a": report.archetype.stance_a.value,
        "stance_b": report.archetype.stance_b.value,
        "fate": fate_to_json(report.fate) if report.fate is not None else None,
        "equilibrium": [report.equilibrium.a, report.equilibrium.b] if report.equilibrium is not None else None,
    }


def dump_json(obj) -> str:
    return json.dumps(obj, allow_nan=False) + "\n"


def trajectory_csv(traj: Trajectory) -> str:
    buf = io.StringIO()
    buf.write("t,a,b,power\n")
    for t, s in enumerate(traj.states):
        buf.write(f"{t},{fmt(s.a)},{fmt(s.b)},{fmt(power(traj.params, s))}\n")
    if traj.truncated_at is not None:
        buf.write(f"# truncated_at={traj.truncated_at}\n")
    return buf.getvalue()


def parse_trajectory_csv(text: str) -> tuple[list[tuple[int, float, float, float]], Optional[int]]:
    """Rows ``(t, a, b, power)`` and the truncation index, if present."""
    rows = []
    truncated_at = None
    lines = text.splitlines()
    if not lines or lines[0] != "t,a,b,power":
        raise ValueError("missing trajectory CSV header")
    for line in lines[1:]:
        if line.startswith("# truncated_at="):
            truncated_at = int(line.split("=", 1)[1])
            continue
        t, a, b, p = line.split(",")
        rows.append((int(t), float(a), float(b), float(p)))
    return rows, truncated_at


def sweep_rows(spec: SweepSpec) -> list[tuple[float, float, Optional[float], str, str]]:
    """Classify every grid cell, alpha-major. ``alpha = beta = 0`` cells are labelled ``degenerate``."""
    rows = []
    for alpha in spec.alphas():
        for beta in spec.betas():
            if alpha == 0 and beta == 0:
                rows.append((alpha, beta, 1.0, "degenerate", "degenerate"))
                continue
            params = ModelParams(alpha, beta, spec.gamma)
            _, behavioral = classifier.classify_stability(params, spec.epsilon)
            archetype = classifier.classify_archetype(params, spec.epsilon)
            rows.append((alpha, beta, params.lambda2, behavioral.value, archetype.case_label.value))
    return rows


def sweep_csv(spec: SweepSpec) -> str:
    buf = io.StringIO()
    buf.write("alpha,beta,lambda2,behavioral_class,archetype\n")
    for alpha, beta, lam, behavioral, archetype in sweep_rows(spec):
        buf.write(f"{fmt(alpha)},{fmt(beta)},{fmt(lam)},{behavioral},{archetype}\n")
    return buf.getvalue()


def compare_powers(params: ModelParams, steps: int) -> dict:
    """Largest disagreement between closed-form and iterated ``M**t`` for ``t = 0..steps``.

    ``max_scaled_diff`` divides by ``max(1, |iterated entry|)``, i.e. relative
    for large entries and absolute for small ones; it drives the pass/fail.
    """
    max_abs = 0.0
    max_scaled = 0.0
    at_t = 0
    for t in range(steps + 1):
        closed = spectral.matrix_power_closed(params, t).entries()
        oracle = spectral.matrix_power_iterative(params, t).entries()
        for c, o in zip(closed, oracle):
            d = abs(c - o)
            scaled = d / max(1.0, abs(o))
            if scaled > max_scaled:
                max_scaled, at_t = scaled, t
            max_abs = max(max_abs, d)
    return {"max_abs_entry_diff": max_abs, "max_scaled_diff": max_scaled, "at_t": at_t}


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)


def _add_initial(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--a0", type=float, required=required)
    p.add_argument("--b0", type=float, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affinity", description="Two-player affinity/power dynamics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify stability, archetype and (with --a0/--b0) the fate")
    _add_params(p)
    _add_initial(p, required=False)
    p.add_argument("--epsilon", type=float, default=classifier.DEFAULT_EPSILON)

    p = sub.add_parser("simulate", help="iterate the recurrence and write a trajectory CSV")
    _add_params(p)
    _add_initial(p, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--threshold", type=float, default=DEFAULT_DIVERGENCE_THRESHOLD)
    p.add_argument("--output", help="write CSV here instead of stdout")

    p = sub.add_parser("predict", help="closed-form state at time t")
    _add_params(p)
    _add_initial(p, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("compare", help="closed-form vs iterated matrix powers")
    _add_params(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("sweep", help="classify a rectangular (alpha, beta) grid; CSV output")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--alpha-min", type=float, required=True)
    p.add_argument("--alpha-max", type=float, required=True)
    p.add_argument("--alpha-steps", type=int, required=True)
    p.add_argument("--beta-min", type=float, required=True)
    p.add_argument("--beta-max", type=float, required=True)
    p.add_argument("--beta-steps", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=classifier.DEFAULT_EPSILON)
    p.add_argument("--output", help="write CSV here instead of stdout")
    return parser


def _initial(args, required: bool) -> Optional[State]:
    if args.a0 is None and args.b0 is None and not required:
        return None
    if args.a0 is None or args.b0 is None:
        raise InputError("--a0 and --b0 must be given together")
    return State(args.a0, args.b0)


def _emit(text: str, output: Optional[str], stdout) -> None:
    if output is None:
        stdout.write(text)
        return
    with open(output, "w", newline="\n") as fh:
        fh.write(text)


def cmd_classify(args, stdout) -> int:
    params = validate_params(args.alpha, args.beta, args.gamma)
    initial = _initial(args, required=False)
    if not args.epsilon > 0:
        raise InputError("epsilon must be > 0")
    report = classifier.classify(params, initial, args.epsilon)
    stdout.write(dump_json(report_to_json(report)))
    return EXIT_OK


def cmd_simulate(args, stdout) -> int:
    cfg = RunConfig(
        params=validate_params(args.alpha, args.beta, args.gamma),
        initial=_initial(args, required=True),
        steps=args.steps,
        divergence_threshold=args.threshold,
        output=args.output,
        format="csv",
    )
    if cfg.steps < 1:
        raise InputError("--steps must be >= 1")
    if not cfg.divergence_threshold > 0:
        raise InputError("--threshold must be > 0")
    traj = simulate(cfg.params, cfg.initial, cfg.steps, cfg.divergence_threshold)
    _emit(trajectory_csv(traj), cfg.output, stdout)
    return EXIT_OK


def cmd_predict(args, stdout) -> int:
    params = validate_params(args.alpha, args.beta, args.gamma)
    initial = _initial(args, required=True)
    if args.t < 0:
        raise InputError("--t must be >= 0")
    s = spectral.state_at(params, initial, args.t)
    stdout.write(dump_json({"t": args.t, "a": s.a, "b": s.b}))
    return EXIT_OK


def cmd_compare(args, stdout) -> int:
    params = validate_params(args.alpha, args.beta, args.gamma)
    if args.steps < 0:
        raise InputError("--steps must be >= 0")
    result = compare_powers(params, args.steps)
    result["tol"] = args.tol
    result["pass"] = result["max_scaled_diff"] <= args.tol
    stdout.write(dump_json(result))
    return EXIT_OK if result["pass"] else EXIT_COMPARE_FAILED


def cmd_sweep(args, stdout) -> int:
    spec = SweepSpec(
        gamma=args.gamma,
        alpha_min=args.alpha_min,
        alpha_max=args.alpha_max,
        beta_min=args.beta_min,
        beta_max=args.beta_max,
        alpha_steps=args.alpha_steps,
        beta_steps=args.beta_steps,
        epsilon=args.epsilon,
    )
    _emit(sweep_csv(spec), args.output, stdout)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "simulate": cmd_simulate,
    "predict": cmd_predict,
    "compare": cmd_compare,
    "sweep": cmd_sweep,
}


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, stdout)
    except (ModelError, InputError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_IO_ERROR


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
