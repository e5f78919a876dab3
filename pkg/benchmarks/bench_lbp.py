#!/usr/bin/env python3
"""Benchmark the compiled code-map kernel against the pure-numpy fallback.

Runs the same pattern-coding workload through both backends and reports
per-call time, throughput in megapixels per second, and the speedup of
the compiled extension.  The two backends are also cross-checked for
bitwise agreement on every benchmarked plane, so a benchmark run doubles
as an equivalence smoke test.

Usage::

    python3 benchmarks/bench_lbp.py [--sizes 256 512 1024] [--repeats 5]
"""

import argparse
import time

import numpy as np

from rocktex._kernels import _codemap_np
from rocktex.lbp import LbpConfig, neighbor_offsets

try:
    from rocktex._kernels import _codemap_cy
except ImportError:
    _codemap_cy = None

# (neighbor count, radius): the unit ring hits integer offsets only,
# the radius-2 ring exercises the bilinear interpolation path.
CONFIGS = ((8, 1.0), (8, 2.0))


def _prepare(size, p, r, rng):
    config = LbpConfig(p=p, r=r)
    off_y, off_x = neighbor_offsets(p, r)
    neighbor = np.ascontiguousarray(rng.random((size, size)) * 255.0)
    center = np.ascontiguousarray(rng.random((size, size)) * 255.0)
    return neighbor, center, off_y, off_x, config.margin


def _time_backend(impl, args, repeats):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        result = impl.code_map(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[256, 512, 1024])
    parser.add_argument("--repeats", type=int, default=5,
                        help="timed runs per case; the best is reported")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _codemap_cy is None:
        print("compiled extension not available (pure-numpy install); "
              "nothing to compare — rebuild without ROCKTEX_NO_EXTENSION "
              "to benchmark it")
        return

    rng = np.random.default_rng(args.seed)
    header = (f"{'plane':>10} {'P,R':>7} {'numpy':>12} {'cython':>12} "
              f"{'numpy Mpx/s':>12} {'cython Mpx/s':>13} {'speedup':>8}")
    print(header)
    print("-" * len(header))
    for size in args.sizes:
        for p, r in CONFIGS:
            call_args = _prepare(size, p, r, rng)
            t_np, out_np = _time_backend(_codemap_np, call_args, args.repeats)
            t_cy, out_cy = _time_backend(_codemap_cy, call_args, args.repeats)
            if not np.array_equal(out_np, out_cy):
                raise SystemExit(
                    f"backend mismatch on {size}x{size} P={p} R={r}")
            mpx = out_np.size / 1e6
            print(f"{size:>7}^2 {p:>4},{r:g} "
                  f"{t_np * 1e3:>10.2f}ms {t_cy * 1e3:>10.2f}ms "
                  f"{mpx / t_np:>12.1f} {mpx / t_cy:>13.1f} "
                  f"{t_np / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
