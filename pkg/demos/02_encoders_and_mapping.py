"""Dual encoders, the norm penalty, and the text-to-image mapping network.

Run with ``python demos/02_encoders_and_mapping.py``; about a minute on one core.
"""

# %% Data and a shared tokenizer.
import torch

from actig_lab import config, dualenc, pipeline, t2imap

torch.set_num_threads(1)
cfg = config.ExperimentConfig()
cfg.dataset.n_train, cfg.dataset.n_test = 1000, 200
cfg.encoder.epochs = 8
split = pipeline.build_dataset(cfg)
tok = pipeline.tokenizer_for(split)
captions, images = pipeline.arrays(split.train)

# %% Contrastive finetuning, with and without the hinge on embedding norms.
# Both start from the same calibrated pair (mean norm 8 on each side); without
# the penalty the two towers drift apart in scale.
runs = {}
for training in ("finetune", "finetune-norm"):
    pair, history = pipeline.fit_encoder("pair", tok, captions, images, cfg, seed=0, training=training)
    runs[training] = pair
    print(training)
    for h in history[::2] + history[-1:]:
        print(f"  epoch {h.epoch:2d}  text {h.mean_text_norm:6.2f}  image {h.mean_image_norm:6.2f}  loss {h.loss:.3f}")

# %% Matched caption/image pairs should now be each other's nearest neighbours.
pair = runs["finetune-norm"]
t, i = t2imap.encode_pairs(pair, captions[:64], images[:64])
cos = dualenc.cosine_matrix(t, i)
print("diagonal mean cosine", cos.diagonal().mean().item(), "off-diagonal", cos.mean().item())

# %% The mapping network turns a text embedding into an approximate image
# embedding; that is what stands in for a real image on image-free iterations.
net, losses = pipeline.fit_mapping(split, pair, cfg, seed=0)
print(f"mapping loss {losses[0].total:.3f} -> {losses[-1].total:.3f}")
test_caps, test_imgs = pipeline.arrays(split.test)
groups = [s.attributes.key(split.vocab) for s in split.test]
for K in (2, 10):
    r = t2imap.evaluate_mapping_retrieval(net, pair, test_caps, test_imgs, K=K, seed=0, groups=groups)
    print(f"held-out retrieval with mapped text, K={K}: {r:.3f} (chance {1 / K:.2f})")
