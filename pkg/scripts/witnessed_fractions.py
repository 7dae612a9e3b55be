"""Fraction of Haar-random 4-tuples whose overlaps witness set imaginarity.

    python scripts/witnessed_fractions.py --samples 1000000 --workers 8
"""

import argparse

from bargmann.experiments import ExperimentConfig, run_fraction

REFERENCE = {2: 608_329, 3: 59_803, 4: 5_914}  # counts out of 10^6

if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    print("dim  witnessed  fraction  sigma     reference  deviation/sigma")
    for d, count in REFERENCE.items():
        res = run_fraction(ExperimentConfig(dim=d, samples=args.samples, seed=args.seed, workers=args.workers))
        ref = count / 1e6
        z = (res.fraction - ref) / res.binomial_sigma if res.binomial_sigma else float("nan")
        print(f"{d:>3}  {res.witnessed_count:>9}  {res.fraction:.5f}  {res.binomial_sigma:.5f}  {ref:.6f}   {z:+.2f}")
