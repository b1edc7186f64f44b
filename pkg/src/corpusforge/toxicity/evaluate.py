"""Detector evaluation against gold labels."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DetectorMetrics:
    precision: float
    recall: float
    f1: float
    fpr: float
    fnr: float
    true_positives: int
    false_positives: int
    true_negatives: int
    false_negatives: int


def evaluate_detector(predicted: Sequence[bool], gold: Sequence[bool]) -> DetectorMetrics:
    """Confusion-matrix metrics for binary flags.

    Degenerate denominators (no gold positives, no predicted positives, no
    gold negatives) yield 0 for the affected metric, with a warning.
    """
    if len(predicted) != len(gold):
        raise ValueError(f"label vectors differ in length: {len(predicted)} vs {len(gold)}")
    tp = sum(1 for p, g in zip(predicted, gold) if p and g)
    fp = sum(1 for p, g in zip(predicted, gold) if p and not g)
    tn = sum(1 for p, g in zip(predicted, gold) if not p and not g)
    fn = sum(1 for p, g in zip(predicted, gold) if not p and g)

    if tp + fn == 0:
        log.warning("no gold positives: recall and F1 reported as 0")
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    fpr = fp / (fp + tn) if fp + tn else 0.0
    fnr = fn / (tp + fn) if tp + fn else 0.0
    return DetectorMetrics(
        precision=precision,
        recall=recall,
        f1=f1,
        fpr=fpr,
        fnr=fnr,
        true_positives=tp,
        false_positives=fp,
        true_negatives=tn,
        false_negatives=fn,
    )
