"""Quality heuristics for single sentences.

Rules are applied in a fixed order — length-min, length-max, punct-ratio,
digit-ratio, emoji-ratio, repeat-run — and the first failing rule names the
drop reason, so reasons partition the dropped set. Length and ratio rules
operate on code points of the emoji-stripped text; the emoji ratio itself
is measured on the incoming text (stripping first would erase the signal).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Optional

from corpusforge.monoclean.normalize import emoji_fraction, strip_emoji


@dataclass(frozen=True)
class HeuristicConfig:
    min_chars: int = 10
    max_chars: int = 2000
    max_punct_ratio: float = 0.20
    max_digit_ratio: float = 0.25
    max_emoji_ratio: float = 0.10
    max_repeat_run: int = 6
    strip_emoji: bool = True

    def __post_init__(self) -> None:
        if not self.min_chars < self.max_chars:
            raise ValueError("min_chars must be < max_chars")
        for name in ("max_punct_ratio", "max_digit_ratio", "max_emoji_ratio"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")


@dataclass(frozen=True)
class HeuristicResult:
    text: str  # emoji-stripped when configured; what the pipeline keeps
    reason: Optional[str]  # None means keep

    @property
    def kept(self) -> bool:
        return self.reason is None


def _longest_run(text: str) -> int:
    longest = run = 0
    prev = None
    for ch in text:
        run = run + 1 if ch == prev else 1
        prev = ch
        longest = max(longest, run)
    return longest


def heuristic_filter(sentence: str, cfg: HeuristicConfig) -> HeuristicResult:
    text = strip_emoji(sentence) if cfg.strip_emoji else sentence
    n = len(text)

    if n < cfg.min_chars:
        return HeuristicResult(text, "length-min")
    if n > cfg.max_chars:
        return HeuristicResult(text, "length-max")

    punct = sum(1 for ch in text if unicodedata.category(ch).startswith("P"))
    if punct / n > cfg.max_punct_ratio:
        return HeuristicResult(text, "punct-ratio")

    digits = sum(1 for ch in text if unicodedata.category(ch) == "Nd")
    if digits / n > cfg.max_digit_ratio:
        return HeuristicResult(text, "digit-ratio")

    if emoji_fraction(sentence) > cfg.max_emoji_ratio:
        return HeuristicResult(text, "emoji-ratio")

    if _longest_run(text) > cfg.max_repeat_run:
        return HeuristicResult(text, "repeat-run")

    return HeuristicResult(text, None)
