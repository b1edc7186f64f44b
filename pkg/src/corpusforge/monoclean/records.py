"""Sentence records and their tab-separated on-disk formats.

Input: line-delimited paragraphs, or two-column "source_id<TAB>text".
Output: "text<TAB>language<TAB>lid_score<TAB>source_id<TAB>line_number".
Rejects: "reason<TAB>text".
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Iterator, TextIO


@dataclass(frozen=True)
class SentenceRecord:
    text: str
    language: str
    lid_score: float
    source_id: str
    line_number: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.lid_score <= 1.0:
            raise ValueError(f"lid_score outside [0, 1]: {self.lid_score}")

    def with_text(self, text: str) -> "SentenceRecord":
        return replace(self, text=text)


def read_paragraphs(path: str | Path) -> Iterator[tuple[str, str, int]]:
    """Yield (source_id, paragraph, line_number), 1-based lines.

    Lines containing a tab are treated as "source_id<TAB>text"; otherwise the
    whole line is the paragraph and the source id is the line number.
    """
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            if "\t" in line:
                source_id, text = line.split("\t", 1)
            else:
                source_id, text = str(lineno), line
            yield source_id, text, lineno


def write_records(records: Iterable[SentenceRecord], out: TextIO) -> int:
    n = 0
    for rec in records:
        out.write(f"{rec.text}\t{rec.language}\t{rec.lid_score:.6f}\t{rec.source_id}\t{rec.line_number}\n")
        n += 1
    return n


def write_rejects(rejects: Iterable[tuple[str, str]], out: TextIO) -> int:
    n = 0
    for reason, text in rejects:
        out.write(f"{reason}\t{text}\n")
        n += 1
    return n
