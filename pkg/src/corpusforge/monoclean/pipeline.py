"""End-to-end monolingual cleaning over paragraphs.

Per-paragraph work (split, URL/hashtag strip, LID gate, heuristics) is
stateless and shard-parallel; deduplication and LM filtering are global and
run once in :func:`finalize_records` after shard outputs are merged in
input order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from corpusforge.lid.model import LidModel
from corpusforge.monoclean.dedup import dedup_records
from corpusforge.monoclean.gate import sentence_lid_gate
from corpusforge.monoclean.heuristics import HeuristicConfig, heuristic_filter
from corpusforge.monoclean.lm import KneserNeyModel, lm_filter
from corpusforge.monoclean.normalize import strip_urls_hashtags
from corpusforge.monoclean.records import SentenceRecord
from corpusforge.monoclean.split import split_paragraph

REASON_EMPTY = "empty"


@dataclass
class CleanStats:
    paragraphs: int = 0
    sentences: int = 0
    kept: int = 0
    dropped: dict = field(default_factory=dict)

    def drop(self, reason: str) -> None:
        self.dropped[reason] = self.dropped.get(reason, 0) + 1

    def merge(self, other: "CleanStats") -> None:
        self.paragraphs += other.paragraphs
        self.sentences += other.sentences
        self.kept += other.kept
        for reason, count in other.dropped.items():
            self.dropped[reason] = self.dropped.get(reason, 0) + count

    def reconciles(self) -> bool:
        return self.sentences == self.kept + sum(self.dropped.values())


def clean_paragraphs(
    paragraphs: Iterable[tuple[str, str, int]],
    language: str,
    model: Optional[LidModel] = None,
    thresholds: Optional[Mapping[str, float]] = None,
    heuristics: Optional[HeuristicConfig] = None,
    script_ranges: Optional[Sequence[tuple[int, int]]] = None,
) -> tuple[list[SentenceRecord], list[tuple[str, str]], CleanStats]:
    """Split, gate, and filter paragraphs into sentence records.

    Returns (kept records, (reason, text) rejects, stats). Dedup and LM
    filtering are deliberately not applied here; see
    :func:`finalize_records`.
    """
    heuristics = heuristics or HeuristicConfig()
    thresholds = thresholds if thresholds is not None else (model.thresholds if model else {})
    kept: list[SentenceRecord] = []
    rejects: list[tuple[str, str]] = []
    stats = CleanStats()

    for source_id, paragraph, line_number in paragraphs:
        stats.paragraphs += 1
        for sentence in split_paragraph(paragraph, language):
            stats.sentences += 1
            stripped = strip_urls_hashtags(sentence)
            if not stripped:
                stats.drop(REASON_EMPTY)
                rejects.append((REASON_EMPTY, sentence))
                continue

            lid_score = 1.0
            if model is not None:
                gate = sentence_lid_gate(language, stripped, model, thresholds, script_ranges)
                lid_score = gate.lid_score
                if not gate.kept:
                    stats.drop(gate.reason)
                    rejects.append((gate.reason, stripped))
                    continue

            result = heuristic_filter(stripped, heuristics)
            if not result.kept:
                stats.drop(result.reason)
                rejects.append((result.reason, stripped))
                continue

            stats.kept += 1
            kept.append(
                SentenceRecord(
                    text=result.text,
                    language=language,
                    lid_score=lid_score,
                    source_id=source_id,
                    line_number=line_number,
                )
            )
    return kept, rejects, stats


def finalize_records(
    records: Sequence[SentenceRecord],
    lm: Optional[KneserNeyModel] = None,
    lm_keep_fraction: float = 1.0,
) -> tuple[list[SentenceRecord], list[tuple[str, str]], dict]:
    """Global reduction: dedup, then optional LM filtering.

    Returns (kept, rejects, counts) where counts maps reason to drop count.
    """
    counts: dict[str, int] = {}
    rejects: list[tuple[str, str]] = []

    unique = dedup_records(records)
    n_dupes = len(records) - len(unique)
    if n_dupes:
        counts["duplicate"] = n_dupes
        seen_ids = {id(rec) for rec in unique}
        for rec in records:
            if id(rec) not in seen_ids:
                rejects.append(("duplicate", rec.text))

    if lm is not None and lm_keep_fraction < 1.0:
        filtered = lm_filter(unique, lm, lm_keep_fraction)
        removed = len(unique) - len(filtered)
        if removed:
            counts["lm-score"] = removed
            kept_ids = {id(rec) for rec in filtered}
            for rec in unique:
                if id(rec) not in kept_ids:
                    rejects.append(("lm-score", rec.text))
        unique = filtered

    return list(unique), rejects, counts
