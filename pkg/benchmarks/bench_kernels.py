"""Time the lattice kernels on both backends.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case fills the nu, dimension and order-bound tables for one lattice
triangle and checks that the backends agree.
"""

import argparse
import time

import numpy as np

from skabelund import BoundTables, TauTable, make_params
from skabelund.kernels import available_backends

CASES = [
    # (label, s, a0, b0, top)
    ("s=1 full sweep triangle", 1, 0, 0, None),
    ("s=1 single bound (1, 517)", 1, 1, 517, None),
    ("s=2 corner, 1500 steps", 2, 10, 60000, 61503),
]


def best_time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    tables = {s: TauTable(make_params(s)) for s in {c[1] for c in CASES}}
    print(f"{'case':32s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for label, s, a0, b0, top in CASES:
        times, results = [], []
        for b in backends:
            t, res = best_time(lambda: BoundTables(tables[s], a0, b0, top, backend=b), args.repeat)
            times.append(t)
            results.append(res.value_table)
        assert all(np.array_equal(results[0], r) for r in results[1:]), label
        speed = f"{times[-1] / times[0]:10.1f}x" if len(times) > 1 else ""
        print(f"{label:32s}" + "".join(f"{t:11.4f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
