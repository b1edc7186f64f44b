"""Sentence splitting with a per-language splitter registry.

The default rule splits after terminal punctuation followed by whitespace;
languages with different conventions (e.g. scripts without ASCII periods)
register their own callable. Splitters must cover the input: joining the
output with spaces reproduces the paragraph modulo trimmed whitespace.
"""

from __future__ import annotations

import re
from typing import Callable

Splitter = Callable[[str], list[str]]

# ASCII terminators, danda (Devanagari), ideographic full stop, Arabic question mark
_DEFAULT_BOUNDARY = re.compile(r"(?<=[.!?।。؟])\s+")

_REGISTRY: dict[str, Splitter] = {}


def default_split(paragraph: str) -> list[str]:
    pieces = [piece.strip() for piece in _DEFAULT_BOUNDARY.split(paragraph)]
    return [piece for piece in pieces if piece]


def register_splitter(language: str, splitter: Splitter) -> None:
    _REGISTRY[language] = splitter


def split_paragraph(paragraph: str, language: str) -> list[str]:
    """Split a paragraph using the splitter registered for ``language``."""
    if not paragraph.strip():
        return []
    splitter = _REGISTRY.get(language, default_split)
    return splitter(paragraph)
