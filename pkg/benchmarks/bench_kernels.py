"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--family 400]

Times the raw subsequence kernel and a whole ``find_comparable_pair`` scan
over a family with no comparable pair (the quadratic worst case), once per
backend.
"""

import argparse
import random
import time
from array import array

from braidminors import _kernels
from braidminors.braidword import PositiveWord
from braidminors.wqo import find_comparable_pair


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def antichain(size, n=4, length=60, seed=1):
    # equal-length distinct words are pairwise incomparable
    rng = random.Random(seed)
    seen = set()
    while len(seen) < size:
        seen.add(tuple(rng.randint(1, n - 1) for _ in range(length)))
    return [PositiveWord.from_indices(n, w) for w in sorted(seen)]


def use(backend):
    _kernels.greedy_embed = backend.greedy_embed
    _kernels.embeds = backend.embeds


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--family", type=int, default=300)
    args = ap.parse_args()

    rng = random.Random(0)
    pairs = [
        (array("q", (rng.randint(0, 3) for _ in range(40))),
         array("q", (rng.randint(0, 3) for _ in range(400))))
        for _ in range(2000)
    ]
    family = antichain(args.family)

    backends = [("python", _kernels.python_backend)]
    if _kernels.compiled_backend is not None:
        backends.append(("compiled", _kernels.compiled_backend))
    else:
        print("compiled backend not built; timing the fallback only")

    rows = []
    for name, backend in backends:
        use(backend)
        kern = best_of(lambda: [backend.greedy_embed(u, v) for u, v in pairs], args.repeat)
        scan = best_of(lambda: find_comparable_pair(family), args.repeat)
        rows.append((name, kern, scan))
    use(_kernels.backend)

    print(f"{'backend':<10} {'greedy_embed x2000':>20} {'pair scan':>14}")
    for name, kern, scan in rows:
        print(f"{name:<10} {kern * 1e3:>17.1f} ms {scan * 1e3:>11.1f} ms")
    if len(rows) == 2:
        print(f"speedup    {rows[0][1] / rows[1][1]:>18.1f}x {rows[0][2] / rows[1][2]:>12.1f}x")


if __name__ == "__main__":
    main()
