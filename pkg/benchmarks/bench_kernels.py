"""Compare the compiled and pure-Python rank kernels.

    python benchmarks/bench_kernels.py [--repeat R]

The exhaustive even-rank check on a skew-symmetric input visits all 2^n - 1
principal submatrices, which is the workload the compiled core exists for.
"""

import argparse
import random
import timeit

from skewrank import kernels
from skewrank.field import Q, FieldSpec
from skewrank.generators import random_skew_matrix
from skewrank.matrix import kernel_grid


def cases():
    rng = random.Random(0)
    for f in (Q, FieldSpec.gf(3), FieldSpec.gf(101)):
        for n in (8, 12):
            m = random_skew_matrix(n, rng, f, entries=(0, 1, -1))
            grid, p = kernel_grid(m)
            yield f"first_odd_principal n={n} {f}", lambda impl, g=grid, p=p: kernels.first_odd_principal(g, p, impl)
        p = f.p or 0
        dense = [[rng.randint(-1, 1) for _ in range(16)] for _ in range(16)]
        grid = [[x % p for x in r] for r in dense] if p else dense
        yield f"rank 16x16 {f}", lambda impl, g=grid, p=p: kernels.rank(g, p, impl)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.compiled_impl is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e .` first")
    py, cy = kernels.get_impl("python"), kernels.get_impl("cython")
    print(f"{'case':42s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for label, fn in cases():
        assert fn(py) == fn(cy), label
        number = 1 if "first_odd" in label else 200
        t_py = min(timeit.repeat(lambda: fn(py), number=number, repeat=args.repeat)) / number
        t_cy = min(timeit.repeat(lambda: fn(cy), number=number, repeat=args.repeat)) / number
        print(f"{label:42s} {t_py:11.6f} {t_cy:11.6f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
