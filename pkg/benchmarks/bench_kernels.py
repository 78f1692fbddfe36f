"""Compare the numba and numpy backends.

Part one times the two fused kernels directly through ``linalg.KERNELS``.
Part two times a full forward+backward training batch, once per backend, in
a fresh interpreter with ``ENN_DISABLE_NUMBA`` set accordingly.

    python benchmarks/bench_kernels.py [--batch 128] [--repeats 20]
"""
import argparse
import json
import os
import subprocess
import sys
import timeit

import numpy as np

BATCH_STEP = r"""
import json, sys, timeit
import numpy as np
from enn import _accel
from enn.cell import CellConfig
from enn.model import EngramClassifier, cross_entropy_grad, forward_batch
B, repeats = int(sys.argv[1]), int(sys.argv[2])
rng = np.random.default_rng(0)
model = EngramClassifier(CellConfig(input_dim=28), 10)
params = model.init_params(rng)
X = rng.uniform(size=(B, 28, 28))
Y = np.eye(10)[rng.integers(0, 10, size=B)]
def batch():
    out = forward_batch(model, params, X, train=True, rng=rng)
    model.backward(params, out.tape, cross_entropy_grad(out.probs, Y))
batch()
best = min(timeit.repeat(batch, number=1, repeat=repeats))
print(json.dumps({"backend": _accel.backend_name(), "seconds": best}))
"""


def bench_kernels(B, repeats):
    from enn import linalg

    rng = np.random.default_rng(0)
    Z = np.maximum(rng.normal(size=(B, 128)), 0)
    E = rng.normal(size=(64, 128))
    H = rng.uniform(-0.1, 0.1, size=(64, 128))
    A = rng.dirichlet(np.ones(64), size=B)
    noise = rng.normal(0, 0.01, size=H.shape)
    rows = []
    for name in sorted(linalg.KERNELS):
        k = linalg.KERNELS[name]
        calls = {
            "cosine_attention": lambda: k["cosine_attention"](Z, E, 0.5, linalg.EPS),
            "hebbian_blend": lambda: k["hebbian_blend"](H, A, Z, 0.01, noise, -0.1, 0.1),
        }
        for kernel, fn in calls.items():
            fn()  # compile / warm up
            t = min(timeit.repeat(fn, number=50, repeat=repeats)) / 50
            rows.append((kernel, name, t))
    return rows


def bench_batch(B, repeats, disable):
    env = dict(os.environ, ENN_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", BATCH_STEP, str(B), str(repeats)],
                         env=env, check=True, capture_output=True, text=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--batch", type=int, default=128)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    print(f"fused kernels, B={args.batch}, h=128, N=64 (best of {args.repeats})")
    for kernel, backend, t in bench_kernels(args.batch, args.repeats):
        print(f"  {kernel:<18} {backend:<6} {t * 1e6:10.1f} us")

    print(f"training batch forward+backward, B={args.batch}, T=28, d=28")
    for disable in (False, True):
        r = bench_batch(args.batch, args.repeats, disable)
        print(f"  {r['backend']:<6} {r['seconds'] * 1e3:8.1f} ms")


if __name__ == "__main__":
    main()
