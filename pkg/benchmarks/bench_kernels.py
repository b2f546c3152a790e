"""Compare the compiled kernels against the numpy fallback.

Run ``python benchmarks/bench_kernels.py``. Kernel timings call both
implementations directly; the training-step timing re-imports the package in
a subprocess with DAELAB_PURE_PYTHON=1 to measure the fallback end to end.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from daelab import kernels
from daelab.kernels import reference

STEP_SNIPPET = """
import timeit, numpy as np
from daelab import kernels
from daelab.datasets import SpriteSpec, generate
from daelab.trainer import TrainConfig, init_state, phase2_step, step_rng
cfg = TrainConfig(batch_size=64)
state = init_state(cfg)
data = generate(SpriteSpec(), 64).images
phase2_step(state, data, cfg, step_rng(cfg, 0))
n = {n}
t = timeit.timeit(lambda: phase2_step(state, data, cfg, step_rng(cfg, 1)), number=n) / n
print(kernels.BACKEND, t)
"""


def best(fn, number, repeat=5):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def kernel_cases():
    rng = np.random.default_rng(0)
    u = rng.standard_normal((64, 256)).astype(np.float32)
    scale = rng.standard_normal((64, 256)).astype(np.float32)
    shift = rng.standard_normal((64, 256)).astype(np.float32)
    g = rng.standard_normal((64, 256)).astype(np.float32)
    imgs = rng.uniform(0, 1, (1000, 16, 16))
    k = np.exp(-0.5 * (np.arange(7) - 3.0) ** 2 / 1.5 ** 2)
    k /= k.sum()
    n = 2000
    sprites = (rng.integers(0, 3, n), rng.uniform(5, 11, n), rng.uniform(5, 11, n),
               rng.uniform(3.8, 4.8, n), rng.uniform(0.2, 1, n), 16)
    return [
        ("modulated_act_forward 64x256 f32", "modulated_act_forward", (u, scale, shift), 200),
        ("modulated_act_backward 64x256 f32", "modulated_act_backward", (g, u, scale, shift), 200),
        ("gaussian_filter_valid 1000x16x16", "gaussian_filter_valid", (imgs, k), 10),
        ("rasterize 2000 sprites 16px", "rasterize", sprites, 3),
    ]


def train_step_time(pure, n):
    env = dict(os.environ)
    if pure:
        env["DAELAB_PURE_PYTHON"] = "1"
    else:
        env.pop("DAELAB_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", STEP_SNIPPET.format(n=n)], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=20, help="training steps to time")
    args = ap.parse_args()
    if kernels.compiled is None:
        print("compiled extension not built; only the numpy fallback is available")
        return
    print(f"{'kernel':40s} {'numpy ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for label, name, call_args, number in kernel_cases():
        t_ref = best(lambda: getattr(reference, name)(*call_args), number)
        t_c = best(lambda: getattr(kernels.compiled, name)(*call_args), number)
        print(f"{label:40s} {1e3 * t_ref:10.3f} {1e3 * t_c:10.3f} {t_ref / t_c:7.2f}x")
    rows = [train_step_time(pure, args.steps) for pure in (True, False)]
    print()
    print("default model, batch 64, one phase-2 step:")
    for backend, t in rows:
        print(f"  {backend:8s} {1e3 * t:8.2f} ms")
    print(f"  speedup  {rows[0][1] / rows[1][1]:7.2f}x")


if __name__ == "__main__":
    main()
