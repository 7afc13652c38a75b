"""Residuals and sweep counts of the Jacobi SVD across matrix sizes.

    python scripts/svd_accuracy.py --trials 20 --sizes 5 10 20 50
"""

import argparse
import time

import numpy as np

from shrinkage import svd
from shrinkage.oracle import make_rng


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 10, 20, 50])
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'n':>4} {'recon':>10} {'ortho':>10} {'sigma vs lapack':>16} {'sweeps':>7} {'ms':>8}")
    for n in args.sizes:
        rng = make_rng(args.seed, n)
        recon = ortho = sig = 0.0
        sweeps = []
        t0 = time.perf_counter()
        for _ in range(args.trials):
            a = rng.standard_normal((n, n))
            f = svd(a)
            recon = max(recon, np.linalg.norm(f.reconstruct() - a) / np.linalg.norm(a))
            ortho = max(ortho, np.abs(f.u.T @ f.u - np.eye(n)).max(), np.abs(f.v.T @ f.v - np.eye(n)).max())
            ref = np.linalg.svd(a, compute_uv=False)
            sig = max(sig, np.abs(f.sigma - ref).max() / ref[0])
            sweeps.append(f.sweeps)
        ms = 1e3 * (time.perf_counter() - t0) / args.trials
        print(f"{n:>4} {recon:>10.1e} {ortho:>10.1e} {sig:>16.1e} {np.mean(sweeps):>7.1f} {ms:>8.1f}")


if __name__ == "__main__":
    main()
