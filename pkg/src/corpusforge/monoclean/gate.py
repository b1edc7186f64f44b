"""Sentence-level language gate.

Paragraph-level LID picks the splitter; after splitting, every sentence is
re-identified and kept only when the thresholded sentence-level prediction
agrees with the paragraph label and the sentence uses the expected script.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from corpusforge.lid.filters import script_filter
from corpusforge.lid.model import LidModel, apply_threshold, predict

REASON_LOW_SCORE = "low LID score"
REASON_MISMATCH = "LID mismatch"
REASON_SCRIPT = "script mismatch"


@dataclass(frozen=True)
class GateResult:
    reason: Optional[str]  # None means keep
    lid_score: float  # probability assigned to the paragraph label

    @property
    def kept(self) -> bool:
        return self.reason is None


def sentence_lid_gate(
    paragraph_label: str,
    sentence: str,
    model: LidModel,
    thresholds: Mapping[str, float],
    script_ranges: Optional[Sequence[tuple[int, int]]] = None,
) -> GateResult:
    prediction = predict(model, sentence)
    by_label = dict(prediction.ranked)
    own_score = by_label.get(paragraph_label, 0.0)

    label = apply_threshold(prediction, thresholds)
    if label is None:
        return GateResult(REASON_LOW_SCORE, own_score)
    if label != paragraph_label:
        return GateResult(REASON_MISMATCH, own_score)
    if script_ranges is not None and not script_filter(sentence, script_ranges):
        return GateResult(REASON_SCRIPT, own_score)
    return GateResult(None, own_score)
