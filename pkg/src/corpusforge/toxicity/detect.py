"""Toxicity detection on single lines and classification of bitext pairs.

An item is detected only when it appears bounded by whitespace or the line
boundaries — "bass" never matches a search for "ass" — and every item
counts at most once per line no matter how often it occurs. Matching is
case-insensitive on both sides.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Callable, Optional

from corpusforge.toxicity.lists import ToxicityList

Tokenizer = Callable[[str], list]


@dataclass(frozen=True)
class DetectionReport:
    matched_items: frozenset

    @property
    def count(self) -> int:
        return len(self.matched_items)


def _is_boundary(char: Optional[str], punctuation_boundaries: bool) -> bool:
    if char is None:
        return True  # line start/end
    if char.isspace():
        return True
    return punctuation_boundaries and unicodedata.category(char).startswith("P")


def _matches_anywhere(text: str, item: str, punctuation_boundaries: bool) -> bool:
    start = 0
    while True:
        pos = text.find(item, start)
        if pos < 0:
            return False
        before = text[pos - 1] if pos > 0 else None
        after_idx = pos + len(item)
        after = text[after_idx] if after_idx < len(text) else None
        if _is_boundary(before, punctuation_boundaries) and _is_boundary(after, punctuation_boundaries):
            return True
        start = pos + 1


def _subword_match(text_tokens: list, item_tokens: list) -> bool:
    n, m = len(text_tokens), len(item_tokens)
    if m == 0 or m > n:
        return False
    for i in range(n - m + 1):
        if text_tokens[i : i + m] == item_tokens:
            return True
    return False


def detect(
    text: str,
    toxicity_list: ToxicityList,
    tokenizer: Optional[Tokenizer] = None,
    punctuation_boundaries: bool = False,
) -> DetectionReport:
    """Unique toxic items present in ``text``.

    Whitespace mode requires items to be surrounded by whitespace or line
    boundaries; multi-word items must match their internal single spaces
    exactly. ``punctuation_boundaries`` relaxes the boundary class to also
    accept punctuation, for lists written with that convention in mind.
    Subword mode matches items as contiguous token subsequences and needs a
    tokenizer.
    """
    lowered = text.lower()
    matched = set()
    if toxicity_list.tokenization_mode == "subword":
        if tokenizer is None:
            raise ValueError("subword mode requires a tokenizer")
        text_tokens = tokenizer(lowered)
        for item in toxicity_list.items:
            if _subword_match(text_tokens, tokenizer(item)):
                matched.add(item)
    else:
        for item in toxicity_list.items:
            if _matches_anywhere(lowered, item, punctuation_boundaries):
                matched.add(item)
    return DetectionReport(matched_items=frozenset(matched))


VARIANTS = ("1+matched", "2+matched", "1+non_matched", "2+non_matched")


def parse_variant(variant: str) -> tuple[int, bool]:
    """Parse a detector variant name into (threshold, matched)."""
    normalized = variant.replace("-", "_").replace("nonmatched", "non_matched")
    if normalized not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    threshold = int(normalized[0])
    return threshold, normalized.endswith("+matched")


def classify_pair(
    src_report: DetectionReport,
    tgt_report: DetectionReport,
    variant: str,
    inclusive_non_matched: bool = False,
) -> bool:
    """Flag a bitext pair under one of the four detector variants.

    ``matched`` variants require both sides to reach the item threshold.
    ``non_matched`` variants flag when exactly one side reaches it; with
    ``inclusive_non_matched`` the requirement weakens to at least one side.
    """
    threshold, matched = parse_variant(variant)
    src_hit = src_report.count >= threshold
    tgt_hit = tgt_report.count >= threshold
    if matched:
        return src_hit and tgt_hit
    if inclusive_non_matched:
        return src_hit or tgt_hit
    return src_hit != tgt_hit


def added_toxicity(src_report: DetectionReport, tgt_report: DetectionReport) -> int:
    """How many more unique toxic items the target has than the source."""
    return max(0, tgt_report.count - src_report.count)
