"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from padic_dedekind import _kernels
from padic_dedekind.classical_sums import CoprimePair, HardyKind, series_terms


def cases():
    rng = random.Random(0)
    vals = [rng.randint(-10**6, 10**6) for _ in range(36)]
    amps, offs, period = series_terms(HardyKind.S3, CoprimePair(7, 29))
    return {
        "alternating_periodic_sum (7^7 terms)": lambda b: _kernels.alternating_periodic_sum(vals, 7**7, backend=b),
        "block_reciprocal_sum (10^4 periods, k=29)": lambda b: _kernels.block_reciprocal_sum(
            amps, offs, period, 10**4, backend=b),
        "residue_power_sums (5^7 terms, mod 5^20)": lambda b: _kernels.residue_power_sums(
            26, 6, 5**7, 5, 5**20, backend=b),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if _kernels.BACKEND == "cython" else [])
    print(f"{'kernel':<45}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases().items():
        times = {b: min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) for b in backends}
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else "       n/a"
        print(f"{name:<45}" + "".join(f"{times[b]:11.4f}s" for b in backends) + speed)


if __name__ == "__main__":
    main()
