"""Text normalization shared by the cleaning and filtering pipelines."""

from __future__ import annotations

import re
import unicodedata

# Pictographic blocks treated as emoji, plus variation selectors. Block-level
# granularity is deliberate: corpus cleaning needs stable coverage, not
# per-code-point Unicode release tracking.
EMOJI_RANGES: tuple[tuple[int, int], ...] = (
    (0x2600, 0x26FF),  # miscellaneous symbols
    (0x2700, 0x27BF),  # dingbats
    (0x2B00, 0x2B5F),  # arrows and stars with emoji presentation
    (0xFE00, 0xFE0F),  # variation selectors
    (0x1F000, 0x1F02F),  # mahjong tiles
    (0x1F0A0, 0x1F0FF),  # playing cards
    (0x1F1E6, 0x1F1FF),  # regional indicators (flag pairs)
    (0x1F300, 0x1F5FF),  # misc symbols and pictographs (incl. skin tones)
    (0x1F600, 0x1F64F),  # emoticons
    (0x1F680, 0x1F6FF),  # transport and map symbols
    (0x1F700, 0x1F77F),  # alchemical symbols
    (0x1F780, 0x1F7FF),  # geometric shapes extended
    (0x1F800, 0x1F8FF),  # supplemental arrows
    (0x1F900, 0x1F9FF),  # supplemental symbols and pictographs
    (0x1FA00, 0x1FAFF),  # symbols and pictographs extended
)

_ZWJ = 0x200D

_URL_RE = re.compile(r"(?<!\S)(?:[a-zA-Z][a-zA-Z0-9+.\-]*://\S+|www\.\S+)")
_HASHTAG_RE = re.compile(r"(?<!\S)#\S+")
_WS_RE = re.compile(r"\s+")


def is_emoji(char: str) -> bool:
    cp = ord(char)
    return any(lo <= cp <= hi for lo, hi in EMOJI_RANGES)


def emoji_fraction(text: str) -> float:
    if not text:
        return 0.0
    return sum(1 for ch in text if is_emoji(ch)) / len(text)


def strip_emoji(text: str) -> str:
    """Remove emoji code points (and joiners between them), collapse spaces."""
    kept = [ch for ch in text if not is_emoji(ch) and ord(ch) != _ZWJ]
    return collapse_whitespace("".join(kept))


def collapse_whitespace(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def strip_urls_hashtags(text: str) -> str:
    """Drop URL tokens (scheme:// or www.) and #hashtags, collapse whitespace.

    URLs and hashtags are Latin-script noise that confuses language and
    script identification, so they are removed before the LID gate.
    """
    text = _URL_RE.sub(" ", text)
    text = _HASHTAG_RE.sub(" ", text)
    return collapse_whitespace(text)


def normalize_for_dedup(text: str) -> str:
    """Canonical key for near-duplicate detection.

    Removes punctuation (category P*) and control/format characters
    (Cc, Cf), replaces every decimal digit with "0", casefolds, and
    collapses whitespace.
    """
    out = []
    for ch in text:
        cat = unicodedata.category(ch)
        if cat.startswith("P") or cat in ("Cc", "Cf"):
            continue
        if cat == "Nd":
            out.append("0")
        else:
            out.append(ch)
    return collapse_whitespace("".join(out).casefold())
