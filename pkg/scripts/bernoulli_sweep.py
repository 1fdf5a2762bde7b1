"""Monte Carlo sweep: single-occupancy fraction of Bernoulli(2^-d) sets.

For each d, draws seeded random sets in Q_n, measures the fraction of
d-subcubes containing exactly one vertex, and compares the sample mean
against the exact expectation (1 - 2^-d)^(2^d - 1).

Usage: python3 scripts/bernoulli_sweep.py --n 10 --max-d 4 --reps 200
"""

import argparse
import statistics

from cubestats import bernoulli_set, distribution_fast, expected_single_fraction


def sweep(n: int, d: int, reps: int, seed0: int) -> tuple[float, float, float]:
    vals = [
        float(distribution_fast(bernoulli_set(n, d, seed0 + i), d).fraction(1))
        for i in range(reps)
    ]
    mean = statistics.fmean(vals)
    se = statistics.stdev(vals) / reps**0.5 if reps > 1 else float("nan")
    return mean, se, float(expected_single_fraction(d))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--max-d", type=int, default=4)
    ap.add_argument("--reps", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'d':>3} {'mean':>10} {'expected':>10} {'se':>9} {'pull':>6}")
    for d in range(1, args.max_d + 1):
        mean, se, exp = sweep(args.n, d, args.reps, args.seed)
        pull = (mean - exp) / se if se else float("nan")
        print(f"{d:>3} {mean:>10.6f} {exp:>10.6f} {se:>9.2e} {pull:>6.2f}")


if __name__ == "__main__":
    main()
