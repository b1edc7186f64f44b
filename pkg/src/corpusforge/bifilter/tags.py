"""Origin tagging for training text.

Secondary data sources are marked with a special token prepended to the
source side so that a downstream model can tell natural from synthetic
data. Primary data is never tagged. Single-tag mode collapses the three
secondary origins into one token.
"""

from __future__ import annotations

from typing import Optional

from corpusforge.bifilter.records import BitextRecord

ORIGIN_TAGS = {
    "mined": "<MINED_DATA>",
    "mmt_bt": "<MMT_BT_DATA>",
    "smt_bt": "<SMT_BT_DATA>",
}
SECONDARY_TAG = "<SECONDARY_DATA>"

_ALL_TAGS = tuple(ORIGIN_TAGS.values()) + (SECONDARY_TAG,)
_TAG_TO_ORIGIN = {tag: origin for origin, tag in ORIGIN_TAGS.items()}


def tag_text(text: str, origin: str, single_tag: bool = False) -> str:
    """Prepend the origin token; primary text passes through untouched."""
    if origin == "primary":
        return text
    if origin not in ORIGIN_TAGS:
        raise ValueError(f"unknown origin {origin!r}")
    token = SECONDARY_TAG if single_tag else ORIGIN_TAGS[origin]
    return f"{token} {text}"


def tag_record(record: BitextRecord, single_tag: bool = False) -> BitextRecord:
    return record.with_src(tag_text(record.src_text, record.origin, single_tag))


def untag_text(text: str) -> tuple[Optional[str], str]:
    """Strip a leading origin token if present.

    Returns (origin, original text); origin is None for untagged text and
    for the single-tag marker, which does not identify a specific origin.
    """
    for token in _ALL_TAGS:
        prefix = token + " "
        if text.startswith(prefix):
            return _TAG_TO_ORIGIN.get(token), text[len(prefix):]
    return None, text
