"""Compare the compiled clause kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--rows 65536] [--clauses 200] [--repeat 5]

Prints one line per (kernel, mode) with the best-of-repeat time for each backend,
the speedup, and whether the outputs matched.
"""

import argparse
import random
import time

import numpy as np

from pmaxsat import _pykernels, kernels
from pmaxsat.formula import NAE, SAT, TERM, exact


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=1 << 16)
    ap.add_argument("--vars", type=int, default=20)
    ap.add_argument("--clauses", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    table = np.random.default_rng(args.seed).integers(0, 2, size=(args.rows, args.vars), dtype=np.int8)
    clauses = [tuple(rng.choice((-1, 1)) * rng.randint(1, args.vars) for _ in range(rng.randint(1, 4)))
               for _ in range(args.clauses)]
    if kernels.BACKEND != "compiled":
        print("compiled extension not built; only the numpy fallback is available")
        return 1
    compiled = kernels._backend
    print(f"rows={args.rows} vars={args.vars} clauses={args.clauses} seed={args.seed}")
    print(f"{'kernel':<15}{'mode':<10}{'compiled ms':>13}{'numpy ms':>11}{'speedup':>9}  match")
    for mode in (SAT, NAE, TERM, exact(2)):
        a, ta = best_of(lambda: kernels.count_rows(table, clauses, mode, backend=compiled), args.repeat)
        b, tb = best_of(lambda: kernels.count_rows(table, clauses, mode, backend=_pykernels), args.repeat)
        print(f"{'count_rows':<15}{str(mode):<10}{ta * 1e3:>13.2f}{tb * 1e3:>11.2f}{tb / ta:>9.1f}  {np.array_equal(a, b)}")
        k = int(np.percentile(a, 99))
        a, ta = best_of(lambda: kernels.first_reaching(table, clauses, mode, k, backend=compiled), args.repeat)
        b, tb = best_of(lambda: kernels.first_reaching(table, clauses, mode, k, backend=_pykernels), args.repeat)
        print(f"{'first_reaching':<15}{str(mode):<10}{ta * 1e3:>13.2f}{tb * 1e3:>11.2f}{tb / ta:>9.1f}  {a == b}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
