"""Compiled vs numpy kernels on the three hot loops.

    python3 benchmarks/bench_kernels.py [--repeat 200]
"""
import argparse
import timeit

import numpy as np

from gegenasym import _pykernels
from gegenasym.coeffs import build_coeff_table
from gegenasym.domain import map_array

try:
    from gegenasym import _kernels
except ImportError:
    _kernels = None


def cases(nodes=512, N=5):
    table = build_coeff_table(1.2, N)
    t = 1.0 + np.exp(2j * np.pi * (np.arange(nodes) + 0.5) / nodes)
    beta, xi = map_array(t)
    f = np.exp(-t)
    et = np.ascontiguousarray(table.arrays["etilde"])
    a = np.ascontiguousarray(table.arrays["a_shift"])
    return {
        "poly_eval": lambda m: m.poly_eval(et, beta),
        "exponent_sums": lambda m: m.exponent_sums(et, a, beta, xi, 11.7, N - 1),
        "cauchy_sum": lambda m: m.cauchy_sum(t, f, 0.9 + 0.1j),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--nodes", type=int, default=512)
    args = ap.parse_args()
    print(f"{'kernel':<15}{'numpy us':>12}{'cython us':>12}{'speedup':>10}")
    for name, fn in cases(args.nodes).items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=args.repeat, repeat=3))
        py *= 1e6 / args.repeat
        if _kernels is None:
            print(f"{name:<15}{py:>12.1f}{'n/a':>12}{'n/a':>10}")
            continue
        cy = min(timeit.repeat(lambda: fn(_kernels), number=args.repeat, repeat=3))
        cy *= 1e6 / args.repeat
        print(f"{name:<15}{py:>12.1f}{cy:>12.1f}{py / cy:>10.2f}")


if __name__ == "__main__":
    main()
