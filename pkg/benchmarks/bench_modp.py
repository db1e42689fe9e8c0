"""Benchmark the prime-field elimination kernels: numba vs pure numpy.

Runs the two workloads that dominate the verification lab - many tiny rank
computations (bracket-pairing trials) and a few mid-size reduced row
echelon forms (section kernels) - against both backends and prints a
comparison table.

    python benchmarks/bench_modp.py [--trials 2000]
"""

import argparse
import time

import numpy as np

from osclines import _modp_numpy
from osclines.modp import DEFAULT_PRIME

try:
    from osclines import _modp_numba
except ImportError:
    _modp_numba = None


def small_rank_workload(backend, mats, p):
    total = 0
    for m in mats:
        total += backend.rank_mod_p(m.copy(), p)
    return total


def rref_workload(backend, mats, p):
    total = 0
    for m in mats:
        rank, _ = backend.rref_mod_p(m.copy(), p)
        total += rank
    return total


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000,
                        help="number of small matrices in the rank workload")
    args = parser.parse_args()

    p = DEFAULT_PRIME
    rng = np.random.default_rng(0)
    small = [rng.integers(0, p, size=(136, 6)).astype(np.int64) for _ in range(args.trials)]
    mid = [rng.integers(0, p, size=(200, 240)).astype(np.int64) for _ in range(5)]

    backends = [("numpy", _modp_numpy)]
    if _modp_numba is not None:
        # trigger jit compilation outside the timed region
        _modp_numba.rank_mod_p(small[0].copy(), p)
        _modp_numba.rref_mod_p(mid[0].copy(), p)
        backends.insert(0, ("numba", _modp_numba))

    print(f"prime {p}; {args.trials} small ranks (136x6), 5 mid rrefs (200x240)")
    print(f"{'backend':<8} {'small-rank':>12} {'mid-rref':>12}")
    results = {}
    for name, backend in backends:
        r1, t1 = timed(small_rank_workload, backend, small, p)
        r2, t2 = timed(rref_workload, backend, mid, p)
        results[name] = (r1, r2)
        print(f"{name:<8} {t1:>11.3f}s {t2:>11.3f}s")

    if len(results) == 2:
        assert results["numba"] == results["numpy"], "backend results differ"
        print("backends agree on all ranks")


if __name__ == "__main__":
    main()
