"""Monolingual cleaning: raw web paragraphs to clean, deduplicated sentences."""

from corpusforge.monoclean.dedup import dedup_records
from corpusforge.monoclean.gate import GateResult, sentence_lid_gate
from corpusforge.monoclean.heuristics import HeuristicConfig, HeuristicResult, heuristic_filter
from corpusforge.monoclean.lm import KneserNeyModel, lm_filter, load_lm, save_lm, train_lm
from corpusforge.monoclean.normalize import (
    collapse_whitespace,
    emoji_fraction,
    normalize_for_dedup,
    strip_emoji,
    strip_urls_hashtags,
)
from corpusforge.monoclean.pipeline import CleanStats, clean_paragraphs, finalize_records
from corpusforge.monoclean.records import SentenceRecord, read_paragraphs, write_records, write_rejects
from corpusforge.monoclean.split import default_split, register_splitter, split_paragraph

__all__ = [
    "dedup_records",
    "GateResult",
    "sentence_lid_gate",
    "HeuristicConfig",
    "HeuristicResult",
    "heuristic_filter",
    "KneserNeyModel",
    "lm_filter",
    "load_lm",
    "save_lm",
    "train_lm",
    "collapse_whitespace",
    "emoji_fraction",
    "normalize_for_dedup",
    "strip_emoji",
    "strip_urls_hashtags",
    "CleanStats",
    "clean_paragraphs",
    "finalize_records",
    "SentenceRecord",
    "read_paragraphs",
    "write_records",
    "write_rejects",
    "default_split",
    "register_splitter",
    "split_paragraph",
]
