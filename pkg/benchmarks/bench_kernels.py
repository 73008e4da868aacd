"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from numsemi import _pykernels

try:
    from numsemi import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases(rng):
    for mod in (300, 10_000, 200_000, 1_000_000):
        steps = sorted(rng.sample(range(mod + 1, 3 * mod), 4))
        yield "apery", f"d1={mod} m=5", (lambda k, m=mod, s=steps: k.apery_distances(m, s))
    for bound in (10_000, 1_000_000, 5_000_000):
        gens = [97, 131, 210, 257]
        yield "enumerate", f"bound={bound}", (lambda k, b=bound, g=gens: k.enumerate_members(g, b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)
    print(f"{'kernel':<10} {'case':<16} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for name, label, call in cases(rng):
        py = best_of(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<10} {label:<16} {py:>11.4f} {'n/a':>11} {'':>8}")
            continue
        assert call(_pykernels) == call(_ckernels)
        cy = best_of(lambda: call(_ckernels), args.repeat)
        print(f"{name:<10} {label:<16} {py:>11.4f} {cy:>11.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
