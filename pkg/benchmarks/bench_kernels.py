"""Compare the compiled and NumPy raster / resize kernels.

    python benchmarks/bench_kernels.py [--repeat 200]
"""
import argparse
import timeit

import numpy as np

from sparsegait import _pykernels
from sparsegait.data import SubjectParams, walker_primitives

try:
    from sparsegait import _ckernels
except ImportError:
    _ckernels = None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--size", type=int, default=64)
    args = ap.parse_args()
    n = args.size
    prims = walker_primitives(SubjectParams.sample(1, 0), 0.3, 90, "BG", (n, n))
    img = np.random.default_rng(0).random((2 * n, 2 * n))
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["compiled"] = _ckernels
        assert np.array_equal(_ckernels.rasterize(prims, n, n), _pykernels.rasterize(prims, n, n))
    else:
        print("compiled extension not built; timing the fallback only")
    for name, mod in backends.items():
        t_r = timeit.timeit(lambda: mod.rasterize(prims, n, n), number=args.repeat) / args.repeat
        t_s = timeit.timeit(lambda: mod.resize_bilinear(img, n, n), number=args.repeat) / args.repeat
        print(f"{name:9s} rasterize {t_r * 1e6:9.1f} us   resize_bilinear {t_s * 1e6:9.1f} us")


if __name__ == "__main__":
    main()
