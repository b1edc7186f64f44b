"""Bitext filtering: alignment score, length, LID, toxicity imbalance, dedup, tagging."""

from corpusforge.bifilter.filters import (
    LengthCorrection,
    dedup_bitext,
    fit_length_correction,
    laser_filter,
    length_filter,
    lid_filter,
    toxicity_imbalance_filter,
)
from corpusforge.bifilter.pipeline import FilterConfig, FilterStats, run_filters
from corpusforge.bifilter.records import (
    ORIGINS,
    BitextRecord,
    MinedMetadata,
    format_metadata_line,
    parse_metadata_line,
    read_bitext,
    write_bitext,
)
from corpusforge.bifilter.tags import ORIGIN_TAGS, SECONDARY_TAG, tag_record, tag_text, untag_text

__all__ = [
    "LengthCorrection",
    "dedup_bitext",
    "fit_length_correction",
    "laser_filter",
    "length_filter",
    "lid_filter",
    "toxicity_imbalance_filter",
    "FilterConfig",
    "FilterStats",
    "run_filters",
    "ORIGINS",
    "BitextRecord",
    "MinedMetadata",
    "format_metadata_line",
    "parse_metadata_line",
    "read_bitext",
    "write_bitext",
    "ORIGIN_TAGS",
    "SECONDARY_TAG",
    "tag_record",
    "tag_text",
    "untag_text",
]
