"""Compare the compiled flip kernel with the pure-Python fallback.

    python3 benchmarks/bench_flip.py --n 24 --flips 2000000 --chains 256

Both kernels consume the same random stream, so the script also checks
that they end in identical tilings.
"""
import argparse
import sys
import time

import numpy as np

from dentile.regions import build_aztec
from dentile.sampler import _kernel_py
from dentile.sampler import tiling as T
from dentile.sampler.kernel import load_kernel


def timed(kernel, region, chains, flips, seed):
    t0 = time.perf_counter()
    mates, _ = T.run_batch(region, chains, flips, seed, threads=1, kernel=kernel)
    return time.perf_counter() - t0, mates


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=24, help="order of the diamond")
    p.add_argument("--flips", type=int, default=2_000_000, help="flips for the single chain")
    p.add_argument("--chains", type=int, default=256, help="chains in the batch run")
    p.add_argument("--batch-flips", type=int, default=20_000)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args(argv)

    region = build_aztec(args.n)
    T.initial_tiling(region)  # warm the layout cache
    compiled = load_kernel()
    if compiled is _kernel_py:
        print("compiled kernel not available; only the Python kernel will run", file=sys.stderr)

    print(f"AD_{args.n}: {len(region.cells)} cells")
    print(f"{'workload':<28}{'kernel':<10}{'seconds':>10}{'flips/s':>14}")
    for label, chains, flips in [("single chain", 1, args.flips),
                                 (f"batch of {args.chains}", args.chains, args.batch_flips)]:
        results = {}
        for kernel in dict.fromkeys([compiled, _kernel_py]):
            secs, mates = timed(kernel, region, chains, flips, args.seed)
            results[kernel.NAME] = (secs, mates)
            print(f"{label:<28}{kernel.NAME:<10}{secs:>10.3f}{chains * flips / secs:>14.3g}")
        if len(results) == 2:
            (a, ma), (b, mb) = results.values()
            same = np.array_equal(ma, mb)
            print(f"{'':<28}speedup {b / a:.1f}x, identical results: {same}")
            if not same:
                return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
