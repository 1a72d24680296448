"""Compare the compiled and pure-numpy kernel backends.

Times the correlation-table accumulation (the verification hot path)
and the pairwise minimum-Hamming scan (the codebook hot path) on random
inputs of growing size, checking both implementations agree before
reporting.
"""

import argparse
import time

import numpy as np

from csseq import _pykernels

try:
    from csseq import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def random_family(rng, n, L, q, null_frac=0.1):
    vals = rng.integers(0, q, size=(n, L))
    nulls = rng.random((n, L)) < null_frac
    vals[nulls] = -1
    return np.ascontiguousarray(vals, dtype=np.int64)


def run(args):
    rng = np.random.default_rng(args.seed)
    impls = [("python", _pykernels)]
    if _ckernels is not None:
        impls.append(("cython", _ckernels))
    else:
        print("compiled backend not built; timing pure python only")

    print(f"{'kernel':<16}{'size':<14}" +
          "".join(f"{name:>12}" for name, _ in impls) + f"{'speedup':>10}")

    for L in args.lengths:
        A = random_family(rng, 4, L, 4)
        B = random_family(rng, 4, L, 4)
        ref = impls[0][1].corr_table_sum(A, B, 4)
        times = []
        for name, mod in impls:
            assert np.array_equal(mod.corr_table_sum(A, B, 4), ref)
            times.append(best_of(mod.corr_table_sum, (A, B, 4), args.repeats))
        ratio = times[0] / times[-1] if len(times) > 1 else 1.0
        print(f"{'corr_table_sum':<16}{f'N=4 L={L}':<14}" +
              "".join(f"{t * 1e3:>10.3f}ms" for t in times) +
              f"{ratio:>9.1f}x")

    for n in args.codebook_sizes:
        codes = random_family(rng, n, 68, 2, null_frac=0.05)
        ref = impls[0][1].min_hamming(codes)[0]
        times = []
        for name, mod in impls:
            assert mod.min_hamming(codes)[0] == ref
            times.append(best_of(mod.min_hamming, (codes,), args.repeats))
        ratio = times[0] / times[-1] if len(times) > 1 else 1.0
        print(f"{'min_hamming':<16}{f'n={n} L=68':<14}" +
              "".join(f"{t * 1e3:>10.3f}ms" for t in times) +
              f"{ratio:>9.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", type=int, nargs="+",
                    default=[64, 256, 1024])
    ap.add_argument("--codebook-sizes", type=int, nargs="+",
                    default=[256, 1024])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    run(ap.parse_args())


if __name__ == "__main__":
    main()
