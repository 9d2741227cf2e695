"""A short GAN run: the alternating schedule, the losses, and held-out evaluation.

Run with ``python demos/03_gan_training.py``; a couple of minutes on one core.
The acceptance grid uses 5,000 iterations; 400 here only show the mechanics.
"""

# %% Frozen assets: pair encoder, attribute encoder, mapping network.
import numpy as np
import torch

from actig_lab import config, evalkit, pipeline, trainloop

torch.set_num_threads(1)
cfg = config.ExperimentConfig()
cfg.dataset.n_train, cfg.dataset.n_test = 1000, 200
cfg.encoder.epochs = 6
cfg.gan.iterations = 400
cfg.gan.z_dim, cfg.gan.w_dim, cfg.gan.g_widths = 64, 128, (64, 32, 16)
split = pipeline.build_dataset(cfg)
tok = pipeline.tokenizer_for(split)
encs, _ = pipeline.fit_encoders(split, cfg, seed=0, tokenizer=tok)
mapping, _ = pipeline.fit_mapping(split, encs.pair, cfg, seed=0)
assets = pipeline.frozen_assets(split, encs, mapping, cfg)

# %% Train. Every fourth iteration is image-free: its prompts are augmented
# captions and the matching discriminator's "real" side is the mapped text.
captions, images = pipeline.arrays(split.train)
data = trainloop.TrainingData(captions, images, assets.encoder)
state = trainloop.init_train_state(cfg.gan, assets, seed=0)
reads = []
logs = []
for _ in range(cfg.gan.iterations):
    before = data.image_reads
    logs.append(trainloop.train_step(state, data))
    reads.append(data.image_reads - before)
print("modes of the first 8 iterations:", [e.mode for e in logs[:8]])
print("images read on image-free iterations:", sum(r for e, r in zip(logs, reads) if e.mode == "IF"))
for e in logs[::100] + logs[-1:]:
    print(f"iter {e.iter:4d} {e.mode:2s}  G_f {e.L_G_f:.3f}  G_m {e.L_G_m:.3f}  attr {e.L_attr:.3f}  "
          f"D_f {e.L_D_f:.3f}  D_m {e.L_D_m:.3f}")

# %% Evaluate on held-out compositions with the evaluation-only encoder.
eval_enc = pipeline.fit_eval_encoder(split, cfg, tok)
metrics = pipeline.evaluate_generator(state.G.eval(), encs.pair, eval_enc, split, cfg, seed=0)
print("FID (evaluation-encoder features):", round(metrics["fid"], 3))
print("R-precision:", metrics["r_precision"])

# Real test images through the same retrieval task give the ceiling.
test_caps, test_imgs = pipeline.arrays(split.test)
groups = [s.attributes.key(split.vocab) for s in split.test]
task = evalkit.build_retrieval_task(eval_enc, test_imgs, test_caps, groups, K=10, seed=0)
print("R-precision of real held-out images:", evalkit.r_precision(task))

# %% Look at one generated sample as a coarse mask of its brightest channel.
with torch.no_grad():
    img = pipeline.generate_for(state.G, encs.pair, test_caps[:1], seed=0)[0].permute(1, 2, 0).numpy()
print(test_caps[0])
mask = img.max(axis=2) > np.quantile(img.max(axis=2), 0.85)
print("\n".join("".join("#" if v else "." for v in row[::2]) for row in mask[::2]))
