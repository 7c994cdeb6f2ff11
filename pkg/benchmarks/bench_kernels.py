"""Compare the compiled and numpy convolution backends.

Times the three hot primitives on the discriminator-sized workloads the
training loop actually runs (28x28 inputs, stride-2 4x4 kernels), plus
one larger case to show how the gap scales.  Run from the repo root:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from sganlab.kernels import load_backend, out_extent

CASES = [
    # name, batch, cin, cout, h, w, k, stride, pad
    ("d_conv1 28x28", 64, 1, 32, 28, 28, 4, 2, 1),
    ("d_conv2 14x14", 64, 32, 64, 14, 14, 4, 2, 1),
    ("wide 32x32", 16, 16, 16, 32, 32, 3, 1, 1),
]


def time_call(fn, *args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(backend, case, repeat):
    name, b, cin, cout, h, w, k, stride, pad = case
    rng = np.random.default_rng(0)
    x = rng.standard_normal((b, cin, h, w))
    kern = rng.standard_normal((cout, cin, k, k))
    oh, ow = out_extent(h, k, stride, pad), out_extent(w, k, stride, pad)
    gy = rng.standard_normal((b, cout, oh, ow))
    return {
        "forward": time_call(backend.conv2d_forward, x, kern, stride, pad,
                             repeat=repeat),
        "grad_data": time_call(backend.conv2d_backward_data, gy, kern,
                               stride, pad, h, w, repeat=repeat),
        "grad_kernel": time_call(backend.conv2d_backward_kernel, x, gy,
                                 stride, pad, k, k, repeat=repeat),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best-of (default 5)")
    args = parser.parse_args()

    backends = {}
    for name in ("cython", "numpy"):
        try:
            backends[name] = load_backend(name)
        except ImportError:
            print(f"{name} backend unavailable, skipping")
    if len(backends) < 2:
        print("need both backends for a comparison; showing what exists")

    print(f"{'case':<16} {'op':<12} "
          + " ".join(f"{n:>10}" for n in backends) + "   speedup")
    for case in CASES:
        rows = {n: bench_case(b, case, args.repeat)
                for n, b in backends.items()}
        for op in ("forward", "grad_data", "grad_kernel"):
            times = [rows[n][op] for n in backends]
            ratio = (f"{times[1] / times[0]:10.2f}x"
                     if len(times) == 2 and times[0] > 0 else "")
            print(f"{case[0]:<16} {op:<12} "
                  + " ".join(f"{t * 1e3:9.2f}ms" for t in times) + ratio)


if __name__ == "__main__":
    main()
