"""Training-data hygiene filters: character histograms and script ranges.

Both filters target mislabeled sentences in web-sourced training data —
short passages in another language, decorative use of foreign scripts,
leetspeak. A sentence passes the histogram filter when at least 80% of its
characters belong to the language's accepted set, and the script filter
when at least 50% of its characters fall inside the expected Unicode
ranges.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

ACCEPTED_FRACTION_CUTOFF = 0.80
SCRIPT_FRACTION_CUTOFF = 0.50


@dataclass(frozen=True)
class CharHistogram:
    language: str
    accepted_chars: frozenset
    percentile: float = 0.95

    def __post_init__(self) -> None:
        if not self.accepted_chars:
            raise ValueError("accepted character set is empty")


def fit_char_histogram(dev_texts: Iterable[str], language: str, percentile: float = 0.95) -> CharHistogram:
    """Smallest character set covering >= ``percentile`` of character mass.

    Characters are ranked by frequency (ties by code point) and the prefix
    of the ranking whose cumulative mass first reaches the percentile is
    accepted.
    """
    counts: Counter = Counter()
    for text in dev_texts:
        counts.update(text)
    if not counts:
        raise ValueError("empty development corpus")
    total = sum(counts.values())
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    accepted = set()
    mass = 0
    for char, count in ranked:
        accepted.add(char)
        mass += count
        if mass / total >= percentile:
            break
    return CharHistogram(language=language, accepted_chars=frozenset(accepted), percentile=percentile)


def accepted_char_fraction(text: str, histogram: CharHistogram) -> float:
    if not text:
        return 1.0
    inside = sum(1 for ch in text if ch in histogram.accepted_chars)
    return inside / len(text)


def char_histogram_filter(
    corpus: Iterable[str], histogram: CharHistogram, cutoff: float = ACCEPTED_FRACTION_CUTOFF
) -> tuple[list[str], list[str]]:
    """Split sentences into (kept, dropped) by accepted-character fraction."""
    kept: list[str] = []
    dropped: list[str] = []
    for sentence in corpus:
        if accepted_char_fraction(sentence, histogram) >= cutoff:
            kept.append(sentence)
        else:
            dropped.append(sentence)
    return kept, dropped


def script_fraction(text: str, ranges: Sequence[tuple[int, int]]) -> float:
    """Fraction of characters whose code point lies in any inclusive range."""
    if not text:
        return 1.0
    inside = 0
    for ch in text:
        cp = ord(ch)
        if any(lo <= cp <= hi for lo, hi in ranges):
            inside += 1
    return inside / len(text)


def script_filter(text: str, ranges: Sequence[tuple[int, int]], cutoff: float = SCRIPT_FRACTION_CUTOFF) -> bool:
    """True (keep) iff at least ``cutoff`` of characters are in-range."""
    return script_fraction(text, ranges) >= cutoff
