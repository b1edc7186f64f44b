"""Bitext records, their TSV format, and the mined-metadata wire format.

Bitext TSV: "src<TAB>tgt<TAB>src_lang<TAB>tgt_lang<TAB>score<TAB>origin"
with an empty score column for records that carry no alignment score.

Mined metadata: 11 space-separated columns per line,

    wet_file_url document_sha1 document_url line_number_in_document
    paragraph_digest sentence_digest lid_score laser_score direction
    language line_number_in_direction

(the first three columns are ``corpus_name.language not_used not_used``
when the row does not come from a web crawl). Paragraph and sentence
digests are XXH3-64 integer digests of the UTF-8 text.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterator, Optional, TextIO

from corpusforge.hashing import text_digest

ORIGINS = ("primary", "mined", "mmt_bt", "smt_bt")


@dataclass(frozen=True)
class BitextRecord:
    src_text: str
    tgt_text: str
    src_lang: str
    tgt_lang: str
    align_score: Optional[float] = None
    origin: str = "primary"

    def __post_init__(self) -> None:
        if self.origin not in ORIGINS:
            raise ValueError(f"unknown origin {self.origin!r}, expected one of {ORIGINS}")

    def with_src(self, src_text: str) -> "BitextRecord":
        return replace(self, src_text=src_text)


def read_bitext(path: str | Path) -> Iterator[BitextRecord]:
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 6:
                raise ValueError(f"{path}:{lineno}: expected 6 tab-separated columns, got {len(parts)}")
            src, tgt, src_lang, tgt_lang, score, origin = parts
            yield BitextRecord(
                src_text=src,
                tgt_text=tgt,
                src_lang=src_lang,
                tgt_lang=tgt_lang,
                align_score=float(score) if score else None,
                origin=origin,
            )


def write_bitext(records, out: TextIO) -> int:
    n = 0
    for rec in records:
        score = f"{rec.align_score:.6f}" if rec.align_score is not None else ""
        out.write(f"{rec.src_text}\t{rec.tgt_text}\t{rec.src_lang}\t{rec.tgt_lang}\t{score}\t{rec.origin}\n")
        n += 1
    return n


@dataclass(frozen=True)
class MinedMetadata:
    source: str  # wet_file_url, or corpus_name.language for non-crawl corpora
    document_sha1: str
    document_url: str
    line_number_in_document: int
    paragraph_digest: int
    sentence_digest: int
    lid_score: float
    laser_score: float
    direction: str
    language: str
    line_number_in_direction: int


def parse_metadata_line(line: str) -> MinedMetadata:
    parts = line.split()
    if len(parts) != 11:
        raise ValueError(f"expected 11 space-separated columns, got {len(parts)}")
    return MinedMetadata(
        source=parts[0],
        document_sha1=parts[1],
        document_url=parts[2],
        line_number_in_document=int(parts[3]),
        paragraph_digest=int(parts[4]),
        sentence_digest=int(parts[5]),
        lid_score=float(parts[6]),
        laser_score=float(parts[7]),
        direction=parts[8],
        language=parts[9],
        line_number_in_direction=int(parts[10]),
    )


def format_metadata_line(meta: MinedMetadata) -> str:
    return " ".join(
        [
            meta.source,
            meta.document_sha1,
            meta.document_url,
            str(meta.line_number_in_document),
            str(meta.paragraph_digest),
            str(meta.sentence_digest),
            f"{meta.lid_score:g}",
            f"{meta.laser_score:g}",
            meta.direction,
            meta.language,
            str(meta.line_number_in_direction),
        ]
    )


def metadata_for_sentence(meta: MinedMetadata, paragraph: str, sentence: str) -> MinedMetadata:
    """Fill the digest columns from the actual texts."""
    return replace(meta, paragraph_digest=text_digest(paragraph), sentence_digest=text_digest(sentence))


def verify_digests(meta: MinedMetadata, paragraph: Optional[str] = None, sentence: Optional[str] = None) -> bool:
    """Check stored digests against recomputed ones for any supplied text."""
    if paragraph is not None and text_digest(paragraph) != meta.paragraph_digest:
        return False
    if sentence is not None and text_digest(sentence) != meta.sentence_digest:
        return False
    return True
