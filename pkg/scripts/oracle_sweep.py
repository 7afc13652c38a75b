"""Run every operator against its brute-force oracle on random instances and
tabulate the worst margins (negative = a competitor beat the closed form).

    python scripts/oracle_sweep.py --instances 50 --max-dim 8
"""

import argparse

import numpy as np

from shrinkage import l0_approx, nuclear_ball_nearest, soft_threshold, svt
from shrinkage.oracle import (coordinate_grid_check, make_rng, merge_reports, nuclear_ball_check,
                              perturbation_check, spectral_family_check, support_enum_l0,
                              svt_objective)


def run(instances, max_dim, seed):
    worst = {}

    def note(name, rep):
        prev = worst.get(name)
        if prev is None or rep.margin < prev.margin:
            worst[name] = rep

    for i in range(instances):
        rng = make_rng(seed, i)
        shape = tuple(int(x) for x in rng.integers(1, max_dim + 1, size=2))
        a = rng.standard_normal(shape) * 3
        beta = 5.0 * (1.0 - rng.random())

        note("l1 prox", coordinate_grid_check(soft_threshold(a, 1 / beta), a, 1.0, beta))
        if a.size <= 16:
            note("l0 prox", support_enum_l0(a, beta, l0_approx(a, beta)))
        x = svt(a, beta).solution
        note("svt", merge_reports(
            perturbation_check(x, svt_objective(a, beta), seed=seed, stream=i, tolerance=1e-9),
            spectral_family_check(x, a, beta)))
        nuc = np.sum(np.linalg.svd(a, compute_uv=False))
        for r in (0.25, 0.5, 0.9):
            tau = r * nuc
            note(f"nuclear ball r={r}",
                 nuclear_ball_check(nuclear_ball_nearest(a, tau).solution, a, tau, seed=seed))
    return worst


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=50)
    parser.add_argument("--max-dim", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'problem':<20} {'worst margin':>13} {'tolerance':>10} {'verdict':>8}")
    for name, rep in run(args.instances, args.max_dim, args.seed).items():
        print(f"{name:<20} {rep.margin:>13.2e} {rep.tolerance:>10.0e} {rep.verdict:>8}")


if __name__ == "__main__":
    main()
