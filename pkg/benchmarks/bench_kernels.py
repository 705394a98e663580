"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 20]
"""

import argparse
import timeit

import numpy as np

from s2nn import _fallback as fb

try:
    from s2nn import _kernels as ck
except ImportError:
    ck = None


def cases(rng):
    x = rng.normal(size=(128, 16, 28, 28)).astype(np.float32)
    cols = fb.im2col(x, 3, 2, 1)
    u = rng.normal(1.0, 1.0, size=(128, 32, 14, 14)).astype(np.float32)
    thr = rng.normal(1.0, 0.1, size=32)
    g = np.ones_like(u)
    return {
        "im2col 128x16x28x28 k3 s2": lambda m: m.im2col(x, 3, 2, 1),
        "col2im (adjoint)": lambda m: m.col2im(cols, x.shape, 3, 2, 1),
        "heaviside per-channel": lambda m: m.heaviside(u, thr, 0.0, 1.0),
        "surrogate s2nn": lambda m: m.surrogate_grad(u, fb.S2NN, 1.0, 1.0, 0.2),
        "surrogate_backward s2nn": lambda m: m.surrogate_backward(g, u, fb.S2NN, 1.0, 1.0, 0.2),
        "surrogate slayer": lambda m: m.surrogate_grad(u, fb.EXPDECAY, 1.0, 1.0, 1.0),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if ck is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':30s} {'cython ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, fn in cases(np.random.default_rng(0)).items():
        t_c = min(timeit.repeat(lambda: fn(ck), number=1, repeat=args.repeat)) * 1e3
        t_p = min(timeit.repeat(lambda: fn(fb), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:30s} {t_c:10.2f} {t_p:10.2f} {t_p / t_c:7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
