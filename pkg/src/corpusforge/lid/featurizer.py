"""Hashed character n-gram featurization.

Sentences are wrapped in sentinel characters so that word-initial and
word-final n-grams are distinguishable from interior ones, then every
character n-gram with length in ``[n_min, n_max]`` is counted with
multiplicity and hashed into a fixed number of buckets with FNV-1a 64
(seedless, platform-stable).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from corpusforge.hashing import fnv1a_64_text

DEFAULT_SENTINEL_START = "‹"  # single left-pointing angle quotation mark
DEFAULT_SENTINEL_END = "›"


@dataclass(frozen=True)
class FeaturizerConfig:
    n_min: int = 2
    n_max: int = 5
    bucket_count: int = 1_000_000
    use_sentinels: bool = True
    sentinel_start: str = DEFAULT_SENTINEL_START
    sentinel_end: str = DEFAULT_SENTINEL_END

    def __post_init__(self) -> None:
        if not (1 <= self.n_min <= self.n_max):
            raise ValueError(f"need 1 <= n_min <= n_max, got ({self.n_min}, {self.n_max})")
        if self.bucket_count < 1:
            raise ValueError(f"bucket_count must be >= 1, got {self.bucket_count}")


def char_ngrams(text: str, cfg: FeaturizerConfig) -> Counter:
    """Count character n-grams of the sentinel-wrapped text, with multiplicity.

    Empty input yields an empty bag: sentinels alone are never featurized.
    """
    if not text:
        return Counter()
    if cfg.use_sentinels:
        text = cfg.sentinel_start + text + cfg.sentinel_end
    grams: Counter = Counter()
    length = len(text)
    for n in range(cfg.n_min, cfg.n_max + 1):
        for i in range(length - n + 1):
            grams[text[i : i + n]] += 1
    return grams


def bucket_id(ngram: str, cfg: FeaturizerConfig) -> int:
    """Bucket index for a single n-gram: fnv1a_64(utf8) mod bucket_count."""
    return fnv1a_64_text(ngram) % cfg.bucket_count


def ngram_features(text: str, cfg: FeaturizerConfig) -> dict[int, int]:
    """Bag of (bucket id, count). Distinct n-grams may collide into one bucket."""
    features: dict[int, int] = {}
    for gram, count in char_ngrams(text, cfg).items():
        bucket = bucket_id(gram, cfg)
        features[bucket] = features.get(bucket, 0) + count
    return features
