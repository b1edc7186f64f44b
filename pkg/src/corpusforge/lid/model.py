"""Trained language-identification model: prediction, thresholding, explanation.

The classifier is linear: an input text is featurized into hashed n-gram
counts, the corresponding embedding rows are mean-pooled (by occurrence),
and a dense output layer plus softmax produces per-language probabilities.
Linearity is what makes :func:`explain` exact — the pre-softmax score of a
label decomposes into one additive term per n-gram plus the label bias.

On-disk format (little-endian throughout)::

    magic          8 bytes  b"NLLBLID1"
    dim            u32
    bucket_count   u64
    n_min, n_max   u16, u16
    use_sentinels  u8
    n_labels       u32
    label table    n_labels x (u16 byte length, UTF-8 bytes, f32 threshold)
    embeddings     bucket_count x dim f32, row-major
    output_weights n_labels x dim f32, row-major
    biases         n_labels f32
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from corpusforge.lid.featurizer import FeaturizerConfig, bucket_id, char_ngrams

MAGIC = b"NLLBLID1"

DEFAULT_THRESHOLD = 0.5
HIGH_RESOURCE_THRESHOLD = 0.9


@dataclass
class LidModel:
    labels: list[str]
    embeddings: np.ndarray  # bucket_count x dim, float32
    output_weights: np.ndarray  # n_labels x dim, float32
    biases: np.ndarray  # n_labels, float32
    thresholds: dict[str, float]
    featurizer: FeaturizerConfig = field(default_factory=FeaturizerConfig)

    def __post_init__(self) -> None:
        if len(self.labels) < 2:
            raise ValueError("a LID model needs at least 2 labels")
        if not (
            np.all(np.isfinite(self.embeddings))
            and np.all(np.isfinite(self.output_weights))
            and np.all(np.isfinite(self.biases))
        ):
            raise ValueError("model parameters must be finite")
        for label, value in self.thresholds.items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"threshold for {label} outside [0, 1]: {value}")

    @property
    def dim(self) -> int:
        return self.embeddings.shape[1]

    def threshold_for(self, label: str) -> float:
        return self.thresholds.get(label, DEFAULT_THRESHOLD)


@dataclass(frozen=True)
class Prediction:
    """Ranked (label, probability) pairs; ``featureless`` flags degenerate input."""

    ranked: tuple[tuple[str, float], ...]
    featureless: bool = False

    @property
    def top(self) -> tuple[str, float]:
        return self.ranked[0]


def default_thresholds(
    labels: Iterable[str], high_resource: Iterable[str] = (), overrides: Optional[Mapping[str, float]] = None
) -> dict[str, float]:
    """Per-language acceptance thresholds: 0.5 baseline, 0.9 for high-resource."""
    high = set(high_resource)
    thresholds = {lab: HIGH_RESOURCE_THRESHOLD if lab in high else DEFAULT_THRESHOLD for lab in labels}
    if overrides:
        thresholds.update(overrides)
    return thresholds


def _softmax(scores: np.ndarray) -> np.ndarray:
    shifted = scores - scores.max()
    exp = np.exp(shifted)
    return exp / exp.sum()


def _pooled_embedding(model: LidModel, counts: Mapping[int, int]) -> np.ndarray:
    total = sum(counts.values())
    pooled = np.zeros(model.dim, dtype=np.float64)
    for bucket, count in counts.items():
        pooled += model.embeddings[bucket].astype(np.float64) * count
    return pooled / total


def scores(model: LidModel, text: str) -> Optional[np.ndarray]:
    """Pre-softmax label scores, or None when the text yields no features."""
    grams = char_ngrams(text, model.featurizer)
    if not grams:
        return None
    counts: dict[int, int] = {}
    for gram, count in grams.items():
        bucket = bucket_id(gram, model.featurizer)
        counts[bucket] = counts.get(bucket, 0) + count
    pooled = _pooled_embedding(model, counts)
    return model.output_weights.astype(np.float64) @ pooled + model.biases.astype(np.float64)


def predict(model: LidModel, text: str, k: Optional[int] = None) -> Prediction:
    """Rank all labels by probability, ties broken by label order.

    Featureless input (empty after featurization) returns a uniform
    distribution with ``featureless=True``.
    """
    raw = scores(model, text)
    n = len(model.labels)
    if raw is None:
        probs = np.full(n, 1.0 / n)
        featureless = True
    else:
        probs = _softmax(raw)
        featureless = False
    order = sorted(range(n), key=lambda i: (-probs[i], i))
    if k is not None:
        order = order[:k]
    ranked = tuple((model.labels[i], float(probs[i])) for i in order)
    return Prediction(ranked=ranked, featureless=featureless)


def apply_threshold(prediction: Prediction, thresholds: Mapping[str, float]) -> Optional[str]:
    """Top label iff its probability clears that label's threshold, else None."""
    label, prob = prediction.top
    if prob >= thresholds.get(label, DEFAULT_THRESHOLD):
        return label
    return None


def explain(model: LidModel, text: str, label: str) -> list[tuple[str, float]]:
    """Per-n-gram contributions to the pre-softmax score of ``label``.

    Each distinct n-gram contributes (count / total occurrences) x
    output_weights[label] . embeddings[bucket]; the contributions plus the
    label bias reconstruct the pre-softmax score exactly. Sorted by
    magnitude, largest first.
    """
    idx = model.labels.index(label)
    grams = char_ngrams(text, model.featurizer)
    if not grams:
        return []
    total = sum(grams.values())
    w = model.output_weights[idx].astype(np.float64)
    contributions = []
    for gram, count in grams.items():
        row = model.embeddings[bucket_id(gram, model.featurizer)].astype(np.float64)
        contributions.append((gram, float(w @ row) * count / total))
    contributions.sort(key=lambda item: (-abs(item[1]), item[0]))
    return contributions


def score_histogram(lid_scores: Sequence[float], bin_count: int = 20) -> list[tuple[float, float, int]]:
    """Histogram of top-label scores over [0, 1], for threshold inspection.

    Returns (lo, hi, count) per bin. The distribution shape (left-skewed,
    extremely left-skewed, right-skewed) guides per-language threshold
    choices; classifying the shape is left to the human eye.
    """
    edges = np.linspace(0.0, 1.0, bin_count + 1)
    counts, _ = np.histogram(np.asarray(lid_scores, dtype=np.float64), bins=edges)
    return [(float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in range(bin_count)]


def save_model(model: LidModel, path: str | Path) -> None:
    """Write the documented little-endian binary format."""
    cfg = model.featurizer
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IQHHBI", model.dim, cfg.bucket_count, cfg.n_min, cfg.n_max, int(cfg.use_sentinels), len(model.labels)))
        for label in model.labels:
            encoded = label.encode("utf-8")
            fh.write(struct.pack("<H", len(encoded)))
            fh.write(encoded)
            fh.write(struct.pack("<f", model.threshold_for(label)))
        fh.write(np.ascontiguousarray(model.embeddings, dtype="<f4").tobytes())
        fh.write(np.ascontiguousarray(model.output_weights, dtype="<f4").tobytes())
        fh.write(np.ascontiguousarray(model.biases, dtype="<f4").tobytes())


def load_model(path: str | Path) -> LidModel:
    with open(path, "rb") as fh:
        magic = fh.read(8)
        if magic != MAGIC:
            raise ValueError(f"not a LID model file (bad magic {magic!r})")
        dim, bucket_count, n_min, n_max, use_sentinels, n_labels = struct.unpack("<IQHHBI", fh.read(21))
        labels: list[str] = []
        thresholds: dict[str, float] = {}
        for _ in range(n_labels):
            (length,) = struct.unpack("<H", fh.read(2))
            label = fh.read(length).decode("utf-8")
            (threshold,) = struct.unpack("<f", fh.read(4))
            labels.append(label)
            thresholds[label] = threshold
        embeddings = np.frombuffer(fh.read(bucket_count * dim * 4), dtype="<f4").reshape(bucket_count, dim).copy()
        output_weights = np.frombuffer(fh.read(n_labels * dim * 4), dtype="<f4").reshape(n_labels, dim).copy()
        biases = np.frombuffer(fh.read(n_labels * 4), dtype="<f4").copy()
    cfg = FeaturizerConfig(n_min=n_min, n_max=n_max, bucket_count=bucket_count, use_sentinels=bool(use_sentinels))
    return LidModel(
        labels=labels,
        embeddings=embeddings,
        output_weights=output_weights,
        biases=biases,
        thresholds=thresholds,
        featurizer=cfg,
    )
