"""Compare the compiled and numpy wedge kernels.

    python benchmarks/bench_wedge.py [--repeat 2000] [--states 2000]

Prints per-call kernel time for several state-matrix shapes, then the time
for a polygon sweep over random three-qubit states under each backend.
"""

import argparse
import timeit

import numpy as np

from entgeom import kernels, polygon_check, random_pure

SHAPES = [(2, 2), (2, 4), (3, 9), (4, 4), (8, 8), (9, 27)]


def kernel_table(repeat: int) -> None:
    rng = np.random.default_rng(0)
    names = sorted(kernels.BACKENDS)
    print(f"{'shape':>8} " + " ".join(f"{n + ' us/call':>18}" for n in names) + f" {'speed-up':>9}")
    for shape in SHAPES:
        m = np.ascontiguousarray(rng.standard_normal(shape) + 1j * rng.standard_normal(shape))
        times = {}
        for name in names:
            fn = kernels.BACKENDS[name].pairwise_wedge_sum
            n = max(1, repeat // (shape[0] * shape[1]) * 4)
            times[name] = min(timeit.repeat(lambda: fn(m), number=n, repeat=3)) / n * 1e6
        ratio = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{str(shape):>8} " + " ".join(f"{times[n]:18.2f}" for n in names) + f" {ratio:9.1f}x")


def sweep_table(states: int) -> None:
    samples = [random_pure([2, 2, 2], s) for s in range(states)]
    previous = kernels.BACKEND
    for name in sorted(kernels.BACKENDS):
        kernels.use_backend(name)
        t = min(timeit.repeat(lambda: [polygon_check(s) for s in samples], number=1, repeat=3))
        print(f"polygon sweep, {states} states, {name:>8}: {t * 1e3:8.1f} ms")
    kernels.use_backend(previous)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=2000)
    parser.add_argument("--states", type=int, default=2000)
    args = parser.parse_args()
    print(f"available backends: {', '.join(sorted(kernels.BACKENDS))} (default: {kernels.BACKEND})")
    kernel_table(args.repeat)
    sweep_table(args.states)


if __name__ == "__main__":
    main()
