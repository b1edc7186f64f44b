"""Individual bitext filters.

Every filter returns None to keep a record or a short reason string
explaining the drop, so the composed pipeline can report exactly one reason
per dropped record.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from corpusforge.bifilter.records import BitextRecord
from corpusforge.lid.model import LidModel, apply_threshold, predict
from corpusforge.monoclean.normalize import normalize_for_dedup
from corpusforge.toxicity.detect import detect
from corpusforge.toxicity.lists import ToxicityList

log = logging.getLogger(__name__)

DEDUP_MODES = ("pair", "source", "target")


def laser_filter(record: BitextRecord, threshold: float = 1.06) -> Optional[str]:
    """Drop mined records whose alignment score falls below the threshold.

    Records of other origins pass regardless; only mining produces the
    alignment scores this filter judges.
    """
    if record.origin != "mined":
        return None
    if record.align_score is None or record.align_score >= threshold:
        return None
    return "laser-score"


@dataclass(frozen=True)
class LengthCorrection:
    """Per-language multipliers that express lengths in English-equivalent units."""

    alphas: Mapping[str, float]
    english: str = "eng_Latn"

    def alpha(self, language: str) -> float:
        value = self.alphas.get(language)
        if value is None:
            log.warning("no length correction for %s, defaulting to 1.0", language)
            return 1.0
        return value


def fit_length_correction(dev_corpora: Mapping[str, Sequence[str]], english: str = "eng_Latn") -> LengthCorrection:
    """alpha_l = total code points of English dev text / total of language l."""
    if english not in dev_corpora:
        raise ValueError(f"dev corpora must include the English key {english!r}")
    totals = {lang: sum(len(text) for text in texts) for lang, texts in dev_corpora.items()}
    n_eng = totals[english]
    if n_eng == 0:
        raise ValueError("English dev corpus is empty")
    alphas = {}
    for lang, total in totals.items():
        if total == 0:
            raise ValueError(f"dev corpus for {lang} is empty")
        alphas[lang] = n_eng / total
    return LengthCorrection(alphas=alphas, english=english)


def length_filter(
    record: BitextRecord,
    correction: Optional[LengthCorrection] = None,
    max_ratio: float = 9.0,
    min_len: float = 15,
) -> Optional[str]:
    """Corrected-length ratio filter, plus a minimum length for backtranslations."""
    alpha_src = correction.alpha(record.src_lang) if correction else 1.0
    alpha_tgt = correction.alpha(record.tgt_lang) if correction else 1.0
    src_len = alpha_src * len(record.src_text)
    tgt_len = alpha_tgt * len(record.tgt_text)
    if min(src_len, tgt_len) == 0:
        return "length-ratio"
    if max(src_len, tgt_len) / min(src_len, tgt_len) > max_ratio:
        return "length-ratio"
    if record.origin in ("mmt_bt", "smt_bt") and min(src_len, tgt_len) < min_len:
        return "min-length"
    return None


def lid_filter(record: BitextRecord, model: LidModel, thresholds: Mapping[str, float]) -> Optional[str]:
    """Both sides must be identified as their declared languages."""
    src_label = apply_threshold(predict(model, record.src_text), thresholds)
    if src_label != record.src_lang:
        return "lid-mismatch"
    tgt_label = apply_threshold(predict(model, record.tgt_text), thresholds)
    if tgt_label != record.tgt_lang:
        return "lid-mismatch"
    return None


def toxicity_imbalance_filter(
    record: BitextRecord,
    lists: Mapping[str, ToxicityList],
    min_delta: int = 2,
) -> Optional[str]:
    """Drop when the sides differ by ``min_delta`` or more unique toxic items.

    A language without a wordlist contributes a count of zero.
    """
    src_count = tgt_count = 0
    src_list = lists.get(record.src_lang)
    if src_list is not None:
        src_count = detect(record.src_text, src_list).count
    tgt_list = lists.get(record.tgt_lang)
    if tgt_list is not None:
        tgt_count = detect(record.tgt_text, tgt_list).count
    if abs(src_count - tgt_count) >= min_delta:
        return "toxicity-imbalance"
    return None


def dedup_bitext(records: Iterable[BitextRecord], mode: str = "pair") -> list[BitextRecord]:
    """Deduplicate on the normalized pair, source side, or target side."""
    if mode not in DEDUP_MODES:
        raise ValueError(f"mode must be one of {DEDUP_MODES}, got {mode!r}")
    seen: set = set()
    unique: list[BitextRecord] = []
    for rec in records:
        if mode == "pair":
            key = (normalize_for_dedup(rec.src_text), normalize_for_dedup(rec.tgt_text))
        elif mode == "source":
            key = normalize_for_dedup(rec.src_text)
        else:
            key = normalize_for_dedup(rec.tgt_text)
        if key in seen:
            continue
        seen.add(key)
        unique.append(rec)
    return unique
