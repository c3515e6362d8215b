#!/usr/bin/env python3
"""Benchmark the numba and numpy kernel backends against each other.

Times representative conv/pool shapes from the three trunks plus a full
feature extraction per backbone. Select a single backend via DPS_KERNELS to
cross-check against the env-flag path.

Usage: python benchmarks/bench_kernels.py [--repeats N] [--size PIXELS]
"""

import argparse
import time

import numpy as np

from dpsim import backbone as bb
from dpsim import kernels

CONV_SHAPES = [
    # label, in chans, H, W, out chans, kernel, stride, padding
    ("alexnet conv1 11x11/4", 3, 96, 96, 64, 11, 4, 2),
    ("vgg16 conv1_1 3x3", 3, 96, 96, 64, 3, 1, 1),
    ("vgg16 conv3_2 3x3", 256, 24, 24, 256, 3, 1, 1),
    ("squeezenet fire6 1x1", 256, 11, 11, 48, 1, 1, 0),
]

POOL_SHAPES = [
    ("vgg16 pool 2x2/2", 64, 96, 96, 2, 2),
    ("alexnet pool 3x3/2", 64, 23, 23, 3, 2),
]


def timed(fn, repeats):
    fn()  # warm-up / JIT compile
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - start) / repeats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--size", type=int, default=96, help="extraction input size")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    rows = []

    for label, ic, h, w, oc, k, stride, pad in CONV_SHAPES:
        x = rng.uniform(-1, 1, size=(ic, h, w)).astype(np.float32)
        wk = rng.normal(size=(oc, ic, k, k)).astype(np.float32)
        b = rng.normal(size=oc).astype(np.float32)
        times = {}
        for backend in ("numba", "numpy"):
            kernels._select_backend(backend)
            times[backend] = timed(lambda: kernels.conv2d(x, wk, b, stride, pad), args.repeats)
        rows.append((f"conv  {label}", times))

    for label, ic, h, w, k, stride in POOL_SHAPES:
        x = rng.uniform(-1, 1, size=(ic, h, w)).astype(np.float32)
        times = {}
        for backend in ("numba", "numpy"):
            kernels._select_backend(backend)
            times[backend] = timed(lambda: kernels.maxpool2d(x, k, stride), args.repeats)
        rows.append((f"pool  {label}", times))

    img = rng.uniform(0, 1, size=(args.size, args.size, 3)).astype(np.float32)
    for ident in bb.BACKBONE_IDS:
        spec = bb.load_backbone(ident)
        weights = bb.synthetic_weights(spec, seed=7)
        times = {}
        for backend in ("numba", "numpy"):
            kernels._select_backend(backend)
            times[backend] = timed(
                lambda: bb.extract_features(img, spec, weights), args.repeats
            )
        rows.append((f"trunk {ident} @{args.size}", times))

    kernels._select_backend(None)

    print(f"{'benchmark':<28} {'numba':>12} {'numpy':>12} {'numba/numpy':>12}")
    for label, times in rows:
        ratio = times["numba"] / times["numpy"]
        print(f"{label:<28} {times['numba']*1e3:>10.2f}ms {times['numpy']*1e3:>10.2f}ms {ratio:>11.2f}x")


if __name__ == "__main__":
    main()
