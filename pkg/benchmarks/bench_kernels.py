"""Compare the numba and numpy implementations of each kernel.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Prints one line per kernel with the best-of-N time for both backends and
checks that they return the same answer. The first numba call of each
kernel is made before timing so JIT loading is excluded.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from halfroot import kernels


def best_of(fn, arg, repeat: int) -> tuple[float, object]:
    out = fn(arg)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(arg)
        best = min(best, time.perf_counter() - t)
    return best, out


def cases(rng: np.random.Generator):
    yield "half_square_adjacency 300x400", "half_square_adjacency", (rng.random((300, 400)) < 0.02).astype(np.uint8)
    # Gamma-free ordering of a 0-1 matrix: scan finds nothing, worst case
    a = np.triu(np.ones((250, 250), dtype=np.uint8))
    yield "find_gamma 250x250 (gamma-free)", "find_gamma", a
    yield "gamma_free_exists 6x7 random", "gamma_free_exists", (rng.random((6, 7)) < 0.5).astype(np.uint8)
    # a non-COP matrix forces the full permutation scan
    claw = np.array([[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]], dtype=np.uint8)
    big = np.zeros((6, 8), dtype=np.uint8)
    big[:3, :4] = claw
    big[3:, 4:] = claw
    yield "cop_exists 6x8 (no order)", "cop_exists", big


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    if not kernels.HAVE_NUMBA:
        print("numba not installed; nothing to compare")
        return 1
    print(f"{'kernel':38s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}  agree")
    for label, name, arg in cases(rng):
        tn, rn = best_of(getattr(kernels, f"{name}_numba"), arg, args.repeat)
        tp, rp = best_of(getattr(kernels, f"{name}_numpy"), arg, args.repeat)
        same = bool(np.array_equal(rn, rp)) if isinstance(rn, np.ndarray) else rn == rp
        print(f"{label:38s} {tn * 1e3:10.3f} {tp * 1e3:10.3f} {tp / max(tn, 1e-9):8.1f}  {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
