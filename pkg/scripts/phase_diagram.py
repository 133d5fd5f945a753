#!/usr/bin/env python3
"""Write behavioral-class phase diagrams over (alpha, beta) for several gammas.

Usage: python scripts/phase_diagram.py [outdir] [--steps N]
Produces one CSV per gamma (sweep format) and prints class counts.
"""
import argparse
from collections import Counter
from pathlib import Path

from affinity_dynamics.cli import SweepSpec, sweep_csv, sweep_rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="phase_out")
    ap.add_argument("--steps", type=int, default=201)
    ap.add_argument("--gammas", type=float, nargs="+", default=[0.5, 1.0, 2.0])
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for gamma in args.gammas:
        spec = SweepSpec(gamma, -3.0, 3.0, -3.0, 3.0, args.steps, args.steps)
        path = out / f"phase_gamma_{gamma:g}.csv"
        path.write_text(sweep_csv(spec))
        counts = Counter(row[3] for row in sweep_rows(spec))
        print(f"gamma={gamma:g} -> {path}")
        for label, n in sorted(counts.items()):
            print(f"  {label:<26} {n:>6}")


if __name__ == "__main__":
    main()
