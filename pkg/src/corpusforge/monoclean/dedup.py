"""Global per-language deduplication, first occurrence wins."""

from __future__ import annotations

from typing import Iterable

from corpusforge.monoclean.normalize import normalize_for_dedup
from corpusforge.monoclean.records import SentenceRecord


def dedup_records(records: Iterable[SentenceRecord]) -> list[SentenceRecord]:
    """Drop records whose (language, normalized text) was already seen.

    Stable: the surviving record is the first occurrence in input order.
    Records of different languages never collide.
    """
    seen: set[tuple[str, str]] = set()
    unique: list[SentenceRecord] = []
    for rec in records:
        key = (rec.language, normalize_for_dedup(rec.text))
        if key in seen:
            continue
        seen.add(key)
        unique.append(rec)
    return unique
