"""Wordlist-based toxicity detection and detector evaluation."""

from corpusforge.toxicity.detect import (
    DetectionReport,
    added_toxicity,
    classify_pair,
    detect,
    parse_variant,
)
from corpusforge.toxicity.evaluate import DetectorMetrics, evaluate_detector
from corpusforge.toxicity.lists import ToxicityList, load_toxicity_list

__all__ = [
    "DetectionReport",
    "added_toxicity",
    "classify_pair",
    "detect",
    "parse_variant",
    "DetectorMetrics",
    "evaluate_detector",
    "ToxicityList",
    "load_toxicity_list",
]
