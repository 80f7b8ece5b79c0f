"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from altenum import kernels
from altenum.oracle import counting


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases():
    rng = np.random.default_rng(0)
    mats = [rng.integers(0, 3, size=(6, 10)) for _ in range(2000)]
    return {
        "rank_mod_p 2000x(6x10) F_3": lambda: [kernels.rank_mod_p(a, 10, 3) for a in mats],
        "rref_mod_p 2000x(6x10) F_3": lambda: [kernels.rref_mod_p(a, 10, 3) for a in mats],
        "graph_census n=6": lambda: kernels.graph_census(6, 0, 1 << 15),
        "colored_pairs n=5 c=3": lambda: kernels.colored_pairs(5, 3, 0, 1 << 10),
        "oracle_nds(4, 3)": lambda: counting.oracle_nds(4, 3),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"{'case':32}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in cases().items():
        times = []
        for b in backends:
            prev = kernels.use_backend(b)
            try:
                times.append(_best(fn, args.repeat))
            finally:
                kernels.use_backend(prev)
        line = f"{name:32}" + "".join(f"{t:11.4f}s" for t in times)
        if len(times) > 1:
            t = dict(zip(backends, times))
            line += f"{t['python'] / t['cython']:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
