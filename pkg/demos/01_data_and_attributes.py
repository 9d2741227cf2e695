"""Walk through the synthetic dataset, the attribute parser and prompt augmentation.

Run with ``python demos/01_data_and_attributes.py``; takes a few seconds.
"""

# %% The dataset: single shapes with a size, a color and a shape.
from collections import Counter

import numpy as np

from actig_lab import attrlang, synthdata

vocab = synthdata.AttributeVocabulary()
heldout = [("red", "circle", "large"), ("blue", "triangle", "small")]
split = synthdata.build_splits(vocab, n_train=400, n_test=40, heldout=heldout, seed=0, grammar="mixed",
                               skew={("blue", "square", "large"): 10})
print(f"{len(vocab.compositions())} compositions, {len(heldout)} held out")
print("train captions:", [s.caption for s in split.train[:4]])
print("test captions: ", [s.caption for s in split.test[:3]])

# The skewed composition dominates training; held-out ones never appear there.
freq = Counter(s.attributes.key(vocab) for s in split.train)
print("most common:", freq.most_common(2))
print("held-out in train:", sum(freq[h] for h in map(tuple, heldout)))

# %% Parsing attributes out of free text.
toy = attrlang.toy_library()
caption = split.train[0].caption
print(caption, "->", [(a.adjective, a.noun) for a in attrlang.extract_attributes(caption, toy)])
print("skeleton:", attrlang.caption_skeleton(caption, toy))

bird = "the long beaked bird has a white body with long brown wings"
print([(a.adjective, a.noun) for a in attrlang.extract_attributes(bird, attrlang.cub_library())])

# %% Augmentation: swap each attribute for another of the same category,
# which produces compositions the training data never pairs with an image.
rng = np.random.default_rng(0)
for _ in range(3):
    print("  ", attrlang.augment_replacement(caption, toy, rng))
prompts = attrlang.synthesize_corpus("random-composition", toy, 2000, seed=0, min_attrs=2, max_attrs=2)
hits = sum(p in {synthdata.make_caption(s.attributes) for s in split.test} for p in prompts)
print(f"{hits} of {len(prompts)} random-composition prompts name a held-out composition")

# %% Images are plain float arrays; print one as a coarse ASCII mask.
img = split.test[0].image
mask = img.max(axis=2) > 0.5
print(split.test[0].caption)
print("\n".join("".join("#" if v else "." for v in row[::2]) for row in mask[::2]))
