"""Data behind the invariant-region figure: boundaries plus Haar scatters.

Writes b3.csv, b4circ.csv and delta{3,4}_d{2,3,4}.csv into --out-dir and
reports how many Delta_4 points fall outside the circulant hull.

    python scripts/fig1_scatter.py --samples 900000 --workers 8 --out-dir fig1
"""

import argparse
from pathlib import Path

import numpy as np

from bargmann.cli import main as cli
from bargmann.experiments import ExperimentConfig, run_scatter
from bargmann.regions import BoundaryHull, b3_constraint, region_extremes

if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out-dir", type=Path, default=Path("fig1"))
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for region in ("b3", "b4circ"):
        cli(["boundary", "--region", region, "--samples", "1024", "--out", str(args.out_dir / f"{region}.csv")])
        for key, ext in region_extremes(region).items():
            print(f"{region} {key}: {ext.value:.6f} at phi = {ext.phi:.6f}")

    hull = BoundaryHull(1024)
    for order in (3, 4):
        for d in (2, 3, 4):
            out = args.out_dir / f"delta{order}_d{d}.csv"
            cli([
                "scatter", "--order", str(order), "--dim", str(d), "--samples", str(args.samples),
                "--seed", str(args.seed), "--workers", str(args.workers), "--out", str(out),
            ])
            cfg = ExperimentConfig(dim=d, samples=args.samples, seed=args.seed, workers=args.workers)
            z = run_scatter(cfg, order)
            if order == 3:
                print(f"Delta_3 d={d}: min constraint {np.min(b3_constraint(z)):.3e}")
            else:
                rep = hull.test(z)
                print(f"Delta_4 d={d}: {rep.n_outside} of {rep.n_points} outside the hull")
