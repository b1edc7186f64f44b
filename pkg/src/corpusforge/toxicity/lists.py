"""Per-language toxicity wordlists.

List files are UTF-8, one item per line; lines whose first non-blank
character is ``#`` are comments. Items are short n-grams, stored lowercased
with surrounding whitespace stripped. Languages whose writing system does
not separate words with spaces use subword mode, which matches items as
token subsequences under an externally supplied tokenizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

TOKENIZATION_MODES = ("whitespace", "subword")


@dataclass(frozen=True)
class ToxicityList:
    language: str
    items: frozenset
    tokenization_mode: str = "whitespace"

    def __post_init__(self) -> None:
        if not self.items:
            raise ValueError("toxicity list is empty")
        if self.tokenization_mode not in TOKENIZATION_MODES:
            raise ValueError(f"tokenization_mode must be one of {TOKENIZATION_MODES}")
        for item in self.items:
            if item != item.strip() or not item:
                raise ValueError(f"list item has surrounding whitespace or is empty: {item!r}")


def make_toxicity_list(language: str, items: Iterable[str], tokenization_mode: str = "whitespace") -> ToxicityList:
    cleaned = frozenset(item.strip().lower() for item in items if item.strip())
    return ToxicityList(language=language, items=cleaned, tokenization_mode=tokenization_mode)


def load_toxicity_list(path: str | Path, language: str = "", tokenization_mode: str = "whitespace") -> ToxicityList:
    items = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            items.append(stripped)
    return make_toxicity_list(language or Path(path).stem, items, tokenization_mode)
