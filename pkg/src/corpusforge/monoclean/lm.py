"""Word n-gram language model with interpolated Kneser-Ney smoothing.

Used to rank sentences by fluency so that only the best fraction of a
high-resource corpus is kept. Scores are length-normalized log
probabilities; unknown words receive mass from a uniform base distribution,
so scoring never fails on out-of-vocabulary input.
"""

from __future__ import annotations

import gzip
import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import math

BOS = "<s>"
EOS = "</s>"


@dataclass
class KneserNeyModel:
    order: int
    discount: float
    counts: list[dict]  # counts[k-1]: k-gram tuple -> count
    context_totals: list[dict]  # per order k>=2: (k-1)-gram -> sum of counts
    context_types: list[dict]  # per order k>=2: (k-1)-gram -> distinct continuations
    cont_counts: list[dict]  # per order k<=order-1: k-gram -> N1+(. g)
    cont_ctx_totals: list[dict]
    cont_ctx_types: list[dict]
    vocab: set = field(default_factory=set)
    _cc_total: int | None = field(default=None, repr=False, compare=False)

    def probability(self, word: str, history: Sequence[str]) -> float:
        """P(word | history) with interpolated Kneser-Ney smoothing."""
        history = tuple(history[-(self.order - 1):]) if self.order > 1 else ()
        return self._prob(word, history, self.order)

    def _prob(self, word: str, history: tuple, k: int) -> float:
        if k == 1:
            cc = self.cont_counts[0].get((word,), 0)
            if self._cc_total is None:
                self._cc_total = sum(self.cont_counts[0].values())
            total = self._cc_total
            uniform = 1.0 / (len(self.vocab) + 1)
            if total == 0:
                return uniform
            n_types = len(self.cont_counts[0])
            return max(cc - self.discount, 0.0) / total + (self.discount * n_types / total) * uniform

        history = history[-(k - 1):]
        if len(history) < k - 1:
            return self._prob(word, history, k - 1)

        if k == self.order:
            gram_counts = self.counts[k - 1]
            totals = self.context_totals[k - 1]
            types = self.context_types[k - 1]
            c_hw = gram_counts.get(history + (word,), 0)
        else:
            gram_counts = self.cont_counts[k - 1]
            totals = self.cont_ctx_totals[k - 1]
            types = self.cont_ctx_types[k - 1]
            c_hw = gram_counts.get(history + (word,), 0)

        c_h = totals.get(history, 0)
        if c_h == 0:
            return self._prob(word, history[1:], k - 1)
        n_types = types.get(history, 0)
        lower = self._prob(word, history[1:], k - 1)
        return max(c_hw - self.discount, 0.0) / c_h + (self.discount * n_types / c_h) * lower

    def score_tokens(self, tokens: Sequence[str]) -> float:
        """Mean natural-log probability per predicted position (incl. EOS)."""
        padded = [BOS] * (self.order - 1) + list(tokens) + [EOS]
        start = self.order - 1
        total = 0.0
        for i in range(start, len(padded)):
            p = self.probability(padded[i], padded[max(0, i - self.order + 1):i])
            total += math.log(max(p, 1e-300))
        return total / (len(tokens) + 1)

    def score_text(self, text: str) -> float:
        return self.score_tokens(text.casefold().split())


def train_lm(sentences: Iterable[str | Sequence[str]], order: int = 3, discount: float = 0.75) -> KneserNeyModel:
    """Train a Kneser-Ney model on sentences (strings are casefolded and split)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if not 0.0 < discount < 1.0:
        raise ValueError("discount must be in (0, 1)")

    counts: list[dict] = [defaultdict(int) for _ in range(order)]
    for sent in sentences:
        tokens = sent.casefold().split() if isinstance(sent, str) else list(sent)
        padded = [BOS] * (order - 1) + tokens + [EOS]
        # k-grams whose last element is a predicted (non-BOS) position
        for k in range(1, order + 1):
            for end in range(order - 1, len(padded)):
                if end - k + 1 < 0:
                    continue
                counts[k - 1][tuple(padded[end - k + 1 : end + 1])] += 1

    context_totals: list[dict] = [dict() for _ in range(order)]
    context_types: list[dict] = [dict() for _ in range(order)]
    for k in range(2, order + 1):
        totals: dict = defaultdict(int)
        types: dict = defaultdict(int)
        for gram, count in counts[k - 1].items():
            totals[gram[:-1]] += count
            types[gram[:-1]] += 1
        context_totals[k - 1] = dict(totals)
        context_types[k - 1] = dict(types)

    # continuation counts: for k-gram g, number of distinct left extensions
    cont_counts: list[dict] = [dict() for _ in range(max(order - 1, 1))]
    cont_ctx_totals: list[dict] = [dict() for _ in range(max(order - 1, 1))]
    cont_ctx_types: list[dict] = [dict() for _ in range(max(order - 1, 1))]
    for k in range(1, order):
        cc: dict = defaultdict(int)
        for gram in counts[k].keys():  # (k+1)-grams
            cc[gram[1:]] += 1
        cont_counts[k - 1] = dict(cc)
        totals = defaultdict(int)
        types = defaultdict(int)
        for gram, count in cc.items():
            totals[gram[:-1]] += count
            types[gram[:-1]] += 1
        cont_ctx_totals[k - 1] = dict(totals)
        cont_ctx_types[k - 1] = dict(types)
    if order == 1:
        # degenerate case: treat raw unigram counts as continuation counts
        cont_counts[0] = {g: c for g, c in counts[0].items()}

    vocab = {gram[0] for gram in counts[0].keys()}
    return KneserNeyModel(
        order=order,
        discount=discount,
        counts=[dict(c) for c in counts],
        context_totals=context_totals,
        context_types=context_types,
        cont_counts=cont_counts,
        cont_ctx_totals=cont_ctx_totals,
        cont_ctx_types=cont_ctx_types,
        vocab=vocab,
    )


def lm_filter(records: Sequence, lm: KneserNeyModel, keep_fraction: float) -> list:
    """Keep the best ``keep_fraction`` of records by LM score.

    Ties (equal scores) are broken by input order; the kept list preserves
    input order. Records may be SentenceRecords or plain strings.
    """
    if not 0.0 < keep_fraction <= 1.0:
        raise ValueError(f"keep_fraction must be in (0, 1], got {keep_fraction}")
    n = len(records)
    if n == 0:
        return []
    keep_count = max(1, int(n * keep_fraction))
    scored = sorted(
        range(n),
        key=lambda i: (-lm.score_text(records[i].text if hasattr(records[i], "text") else records[i]), i),
    )
    keep_idx = sorted(scored[:keep_count])
    return [records[i] for i in keep_idx]


def save_lm(model: KneserNeyModel, path: str | Path) -> None:
    def encode(table: dict) -> dict:
        return {"\x1f".join(k): v for k, v in table.items()}

    payload = {
        "order": model.order,
        "discount": model.discount,
        "counts": [encode(t) for t in model.counts],
        "context_totals": [encode(t) for t in model.context_totals],
        "context_types": [encode(t) for t in model.context_types],
        "cont_counts": [encode(t) for t in model.cont_counts],
        "cont_ctx_totals": [encode(t) for t in model.cont_ctx_totals],
        "cont_ctx_types": [encode(t) for t in model.cont_ctx_types],
        "vocab": sorted(model.vocab),
    }
    with gzip.open(path, "wt", encoding="utf-8") as fh:
        json.dump(payload, fh, ensure_ascii=False)


def load_lm(path: str | Path) -> KneserNeyModel:
    def decode(table: dict) -> dict:
        return {tuple(k.split("\x1f")): v for k, v in table.items()}

    with gzip.open(path, "rt", encoding="utf-8") as fh:
        payload = json.load(fh)
    return KneserNeyModel(
        order=payload["order"],
        discount=payload["discount"],
        counts=[decode(t) for t in payload["counts"]],
        context_totals=[decode(t) for t in payload["context_totals"]],
        context_types=[decode(t) for t in payload["context_types"]],
        cont_counts=[decode(t) for t in payload["cont_counts"]],
        cont_ctx_totals=[decode(t) for t in payload["cont_ctx_totals"]],
        cont_ctx_types=[decode(t) for t in payload["cont_ctx_types"]],
        vocab=set(payload["vocab"]),
    )
