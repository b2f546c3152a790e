"""Calibration sweep behind the frozen trends settings.

Trains the trend models under one optimizer setting and prints stochastic
decoding metrics for two subcode seeds. Example:

    python3 results/calibration/sweep.py --lr 3e-4 --models x0,v,v2
"""

import argparse
import time

import numpy as np

from daelab.datasets import SpriteSpec, generate, split
from daelab.metrics import reconstruction_report
from daelab.sampler import SamplerConfig, stochastic_autoencode
from daelab.trainer import TrainConfig, build_models, train

MODELS = {"eps": ("eps", 0.0), "x0": ("x0", 0.0), "v": ("v", 0.0), "v2": ("v", 0.25), "v1": ("v", 1.0)}

ap = argparse.ArgumentParser()
ap.add_argument("--lr", type=float, default=1e-3)
ap.add_argument("--ema", type=float, default=0.995)
ap.add_argument("--total", type=int, default=200_000)
ap.add_argument("--warm", type=int, default=5120)
ap.add_argument("--latent", type=int, default=64)
ap.add_argument("--models", default="eps,x0,v,v2")
args = ap.parse_args()

data = generate(SpriteSpec(16, 0), 2000)
train_set, test_set = split(data)
x = test_set.images[:200].astype(np.float64)
print(vars(args), flush=True)
for name in args.models.split(","):
    pred, frac = MODELS[name]
    cfg = TrainConfig(prediction=pred, phase1_fraction=frac, total_examples=args.total,
                      lr_max=args.lr, warmup_examples=args.warm, ema_decay=args.ema,
                      latent_dim=args.latent)
    t0 = time.time()
    state = train(cfg, train_set.images)
    enc, dec = build_models(state, cfg)
    reps = [reconstruction_report(x, stochastic_autoencode(enc, dec, x.reshape(200, -1), s, SamplerConfig()))
            for s in (123, 456)]
    print(name, f"{time.time() - t0:.0f}s", " | ".join(
        f"psnr {r['psnr']:.2f} ssim {r['ssim']:.3f} fd {r['frechet64']:.4f}" for r in reps), flush=True)
