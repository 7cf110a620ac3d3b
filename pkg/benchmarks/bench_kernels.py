"""
Compare the numba and pure-numpy kernels on signless Laplacians of random
hypergraphs.

    python benchmarks/bench_kernels.py --sizes 10 20 40 80 --repeat 3

Both paths are imported directly, so the HYPERQ_DISABLE_NUMBA flag does not
matter here.
"""

import argparse
import time
from math import comb

import numpy as np

from hyperq._kernels import (
    all_pairs_bfs_numba,
    all_pairs_bfs_numpy,
    jacobi_sweeps_numba,
    jacobi_sweeps_numpy,
)
from hyperq.generate import random_hypergraph
from hyperq.spectral import signless_laplacian


def time_function(func, *args, repeat=3):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args)
        times.append(time.perf_counter() - start)
    return min(times), result


def jacobi(kernel, q):
    a = np.ascontiguousarray(q.astype(np.float64))
    v, sweeps, _ = kernel(a, 1e-12, 100)
    return np.sort(np.diag(a)), sweeps


def main():
    parser = argparse.ArgumentParser(description=__doc__.strip().split("\n\n")[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    # Warm up the JIT.
    warm = signless_laplacian(random_hypergraph(3, 6, 5, seed=0))
    jacobi(jacobi_sweeps_numba, warm)
    all_pairs_bfs_numba(warm > 0)

    print(f"{'n':>5} {'m':>6} {'kernel':>8} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for n in args.sizes:
        m = min(comb(n, args.k), 2 * n)
        h = random_hypergraph(args.k, n, m, seed=args.seed)
        q = signless_laplacian(h)
        t_nb, (w_nb, _) = time_function(jacobi, jacobi_sweeps_numba, q, repeat=args.repeat)
        t_np, (w_np, _) = time_function(jacobi, jacobi_sweeps_numpy, q, repeat=args.repeat)
        assert np.allclose(w_nb, w_np, atol=1e-9)
        print(f"{h.n:>5} {h.m:>6} {'jacobi':>8} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f}")

        adj = q > 0
        np.fill_diagonal(adj, False)
        t_nb, d_nb = time_function(all_pairs_bfs_numba, adj, repeat=args.repeat)
        t_np, d_np = time_function(all_pairs_bfs_numpy, adj, repeat=args.repeat)
        assert np.array_equal(d_nb, d_np)
        print(f"{h.n:>5} {h.m:>6} {'bfs':>8} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
