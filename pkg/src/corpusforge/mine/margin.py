"""Margin scoring, exact nearest-neighbor search, and global mining.

The margin score of a candidate pair divides (or offsets, depending on the
margin kind) its cosine similarity by the mean similarity of each side's k
nearest neighbors in the other language, which penalizes hub sentences that
are close to everything. Search is exact brute force: candidate pools at
desk scale never justify approximate indexes, and exactness is what the
oracle tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from corpusforge.mine.embeddings import EmbeddingMatrix

MARGIN_KINDS = ("ratio", "distance", "absolute")


@dataclass(frozen=True)
class MiningConfig:
    k: int = 4
    margin_kind: str = "ratio"
    threshold: float = 1.06
    exclude_same_id: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.margin_kind not in MARGIN_KINDS:
            raise ValueError(f"margin_kind must be one of {MARGIN_KINDS}")
        if self.margin_kind == "ratio" and self.threshold <= 0:
            raise ValueError("ratio margin needs a positive threshold")


@dataclass(frozen=True)
class MinedPair:
    src_id: str
    tgt_id: str
    margin_score: float
    cosine: float


def cosine(x: Sequence[float], y: Sequence[float]) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx == 0.0 or ny == 0.0:
        raise ValueError("cosine undefined for zero vector")
    return float(x @ y / (nx * ny))


def _unit_rows(matrix: EmbeddingMatrix) -> np.ndarray:
    norms = np.linalg.norm(matrix.rows, axis=1, keepdims=True)
    if np.any(norms == 0.0):
        raise ValueError("embedding matrix contains a zero row")
    return matrix.rows / norms


def _margin(a, b, kind: str):
    if kind == "ratio":
        if np.any(b == 0.0):
            raise ValueError("degenerate neighborhood: zero denominator")
        return a / b
    if kind == "distance":
        return a - b
    return a


def knn(queries: EmbeddingMatrix, index: EmbeddingMatrix, k: int, block_size: int = 4096) -> list[list[tuple[str, float]]]:
    """Exact top-k by cosine, descending, ties broken by ascending row index."""
    if queries.dim != index.dim:
        raise ValueError(f"dimension mismatch: {queries.dim} vs {index.dim}")
    k = min(k, len(index))
    qn = _unit_rows(queries)
    xn = _unit_rows(index)
    out: list[list[tuple[str, float]]] = []
    for start in range(0, len(queries), block_size):
        sims = qn[start : start + block_size] @ xn.T
        # stable sort on -sims keeps ascending index among ties
        order = np.argsort(-sims, axis=1, kind="stable")[:, :k]
        for row, idxs in enumerate(order):
            out.append([(index.ids[j], float(sims[row, j])) for j in idxs])
    return out


def margin_score(
    x: Sequence[float],
    y: Sequence[float],
    nn_x: Sequence[float],
    nn_y: Sequence[float],
    cfg: MiningConfig = MiningConfig(),
) -> float:
    """Margin of the pair (x, y) given each side's neighbor cosines."""
    if len(nn_x) != len(nn_y):
        raise ValueError(f"neighbor lists must have equal size, got {len(nn_x)} and {len(nn_y)}")
    k = len(nn_x)
    if k == 0:
        raise ValueError("neighbor lists are empty")
    denom = (sum(nn_x) + sum(nn_y)) / (2.0 * k)
    return float(_margin(np.float64(cosine(x, y)), np.float64(denom), cfg.margin_kind))


def _neighborhood_means(sims: np.ndarray, k: int, exclude: np.ndarray | None, axis: int) -> np.ndarray:
    """Mean of the top-k similarities along ``axis`` (1 = per row, 0 = per column)."""
    work = sims if axis == 1 else sims.T
    if exclude is not None:
        work = np.where(exclude if axis == 1 else exclude.T, -np.inf, work)
    k = min(k, work.shape[1])
    top = np.sort(work, axis=1)[:, -k:]
    counts = np.isfinite(top).sum(axis=1)
    if np.any(counts == 0):
        raise ValueError("a row has no usable neighbors")
    finite = np.where(np.isfinite(top), top, 0.0)
    return finite.sum(axis=1) / counts


def _margin_matrix(src: EmbeddingMatrix, tgt: EmbeddingMatrix, cfg: MiningConfig) -> tuple[np.ndarray, np.ndarray]:
    """(margin matrix, cosine matrix) for all source x target pairs."""
    if src.dim != tgt.dim:
        raise ValueError(f"dimension mismatch: {src.dim} vs {tgt.dim}")
    sims = _unit_rows(src) @ _unit_rows(tgt).T
    exclude = None
    if cfg.exclude_same_id:
        src_ids = np.array(src.ids)
        tgt_ids = np.array(tgt.ids)
        exclude = src_ids[:, None] == tgt_ids[None, :]
    mean_src = _neighborhood_means(sims, cfg.k, exclude, axis=1)
    mean_tgt = _neighborhood_means(sims, cfg.k, exclude, axis=0)
    denom = (mean_src[:, None] + mean_tgt[None, :]) / 2.0
    margins = _margin(sims, denom, cfg.margin_kind)
    if exclude is not None:
        margins = np.where(exclude, -np.inf, margins)
    return margins, sims


def mine(src: EmbeddingMatrix, tgt: EmbeddingMatrix, cfg: MiningConfig = MiningConfig()) -> list[MinedPair]:
    """Global mining: best-margin match per source row and per target row.

    The union of both directions is deduplicated on (src_id, tgt_id) and
    pairs scoring below the threshold are discarded. Output is sorted by
    descending score, then ids.
    """
    margins, sims = _margin_matrix(src, tgt, cfg)
    candidates: dict[tuple[int, int], float] = {}
    forward = np.argmax(margins, axis=1)
    for i, j in enumerate(forward):
        key = (i, int(j))
        candidates[key] = max(candidates.get(key, -np.inf), float(margins[i, j]))
    backward = np.argmax(margins, axis=0)
    for j, i in enumerate(backward):
        key = (int(i), j)
        candidates[key] = max(candidates.get(key, -np.inf), float(margins[i, j]))

    pairs = [
        MinedPair(src.ids[i], tgt.ids[j], score, float(sims[i, j]))
        for (i, j), score in candidates.items()
        if np.isfinite(score) and score >= cfg.threshold
    ]
    pairs.sort(key=lambda p: (-p.margin_score, p.src_id, p.tgt_id))
    return pairs


def xsim(src: EmbeddingMatrix, tgt: EmbeddingMatrix, cfg: MiningConfig = MiningConfig()) -> float:
    """Similarity-search error rate over row-aligned gold pairs.

    Each source row is aligned to the target row with the highest margin;
    the error rate is the fraction of rows whose best match is not the
    gold (same-index) row.
    """
    if len(src) != len(tgt):
        raise ValueError(f"gold alignment needs equal row counts, got {len(src)} and {len(tgt)}")
    margins, _ = _margin_matrix(src, tgt, cfg)
    predicted = np.argmax(margins, axis=1)
    return float(np.mean(predicted != np.arange(len(src))))
