"""Margin-based bitext mining over precomputed sentence embeddings."""

from corpusforge.mine.embeddings import EmbeddingMatrix, load_embeddings, save_embeddings
from corpusforge.mine.margin import (
    MinedPair,
    MiningConfig,
    cosine,
    knn,
    margin_score,
    mine,
    xsim,
)

__all__ = [
    "EmbeddingMatrix",
    "load_embeddings",
    "save_embeddings",
    "MinedPair",
    "MiningConfig",
    "cosine",
    "knn",
    "margin_score",
    "mine",
    "xsim",
]
