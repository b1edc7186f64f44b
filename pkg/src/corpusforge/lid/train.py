"""Training for the linear n-gram classifier.

Plain SGD with a linearly decaying learning rate on softmax cross-entropy
over mean-pooled feature embeddings. Class imbalance is handled by
temperature upsampling: sentences are drawn with per-language probability
proportional to p_l^(1/T), and rare features are discarded by their
expected occurrence count *after* upsampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from corpusforge.lid.featurizer import FeaturizerConfig, ngram_features
from corpusforge.lid.model import LidModel, default_thresholds


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.8
    epochs: int = 2
    dim: int = 256
    min_token_count: int = 1000
    inverse_temperature: float = 0.3
    seed: int = 0

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if not 0.0 < self.inverse_temperature <= 1.0:
            raise ValueError("inverse_temperature must be in (0, 1]")


def temperature_weights(counts: Sequence[float], inverse_temperature: float) -> np.ndarray:
    """Sampling weights proportional to (count_l / total)^(1/T), normalized.

    1/T = 1 reproduces the empirical distribution; smaller values flatten it
    towards uniform.
    """
    counts = np.asarray(counts, dtype=np.float64)
    if np.any(counts < 0):
        raise ValueError("counts must be non-negative")
    total = counts.sum()
    if total == 0:
        raise ValueError("empty corpus")
    powered = (counts / total) ** inverse_temperature
    return powered / powered.sum()


def train(
    corpus: Sequence[tuple[str, str]],
    feat_cfg: FeaturizerConfig | None = None,
    train_cfg: TrainConfig | None = None,
) -> LidModel:
    """Train a LID model on (text, label) pairs. Deterministic given the seed.

    Features whose expected post-upsampling occurrence count falls below
    ``min_token_count`` are discarded before training.
    """
    feat_cfg = feat_cfg or FeaturizerConfig()
    train_cfg = train_cfg or TrainConfig()

    labels = sorted({label for _, label in corpus})
    if len(labels) < 2:
        raise ValueError(f"need at least 2 labels, corpus has {labels}")
    label_index = {label: i for i, label in enumerate(labels)}

    featurized = [(ngram_features(text, feat_cfg), label_index[label]) for text, label in corpus]
    n_sentences = len(featurized)

    lang_counts = np.zeros(len(labels), dtype=np.float64)
    for _, lab in featurized:
        lang_counts[lab] += 1
    weights = temperature_weights(lang_counts, train_cfg.inverse_temperature)
    # expected replications of each sentence in one upsampled epoch of size N
    upsample = np.zeros(len(labels), dtype=np.float64)
    nonzero = lang_counts > 0
    upsample[nonzero] = n_sentences * weights[nonzero] / lang_counts[nonzero]

    expected_feature_counts: dict[int, float] = {}
    for features, lab in featurized:
        factor = upsample[lab]
        for bucket, count in features.items():
            expected_feature_counts[bucket] = expected_feature_counts.get(bucket, 0.0) + factor * count
    kept_buckets = {b for b, c in expected_feature_counts.items() if c >= train_cfg.min_token_count}

    examples = []
    for features, lab in featurized:
        kept = {b: c for b, c in features.items() if b in kept_buckets}
        if kept:
            ids = np.fromiter(kept.keys(), dtype=np.int64)
            cnts = np.fromiter(kept.values(), dtype=np.float64)
            examples.append((ids, cnts / cnts.sum(), lab))
        else:
            examples.append(None)

    rng = np.random.default_rng(train_cfg.seed)
    dim = train_cfg.dim
    embeddings = rng.uniform(-1.0 / dim, 1.0 / dim, size=(feat_cfg.bucket_count, dim))
    output_weights = np.zeros((len(labels), dim), dtype=np.float64)
    biases = np.zeros(len(labels), dtype=np.float64)

    sentence_probs = upsample[np.array([lab for _, lab in featurized])]
    sentence_probs = sentence_probs / sentence_probs.sum()

    total_steps = train_cfg.epochs * n_sentences
    step = 0
    for _ in range(train_cfg.epochs):
        order = rng.choice(n_sentences, size=n_sentences, p=sentence_probs)
        for idx in order:
            lr = train_cfg.learning_rate * (1.0 - step / total_steps)
            step += 1
            example = examples[idx]
            if example is None:
                continue
            ids, frac, lab = example
            hidden = frac @ embeddings[ids]
            logits = output_weights @ hidden + biases
            logits -= logits.max()
            probs = np.exp(logits)
            probs /= probs.sum()
            grad = probs
            grad[lab] -= 1.0
            grad_hidden = output_weights.T @ grad
            output_weights -= lr * np.outer(grad, hidden)
            biases -= lr * grad
            embeddings[ids] -= lr * frac[:, None] * grad_hidden[None, :]

    return LidModel(
        labels=labels,
        embeddings=embeddings.astype(np.float32),
        output_weights=output_weights.astype(np.float32),
        biases=biases.astype(np.float32),
        thresholds=default_thresholds(labels),
        featurizer=feat_cfg,
    )
