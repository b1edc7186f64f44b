"""Dense sentence-embedding matrices and their raw on-disk format.

Files are raw little-endian 32-bit floats, row-major; the dimension is
supplied out of band (CLI ``--dim``, default 1024). Sentence ids default to
0-based row indices as strings, or come from a parallel line-delimited text
file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np


@dataclass
class EmbeddingMatrix:
    rows: np.ndarray  # N x dim
    ids: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.rows = np.asarray(self.rows, dtype=np.float64)
        if self.rows.ndim != 2 or self.rows.shape[0] < 1:
            raise ValueError(f"rows must be a non-empty 2-D matrix, got shape {self.rows.shape}")
        if not np.all(np.isfinite(self.rows)):
            raise ValueError("embeddings contain NaN or Inf")
        if not self.ids:
            self.ids = [str(i) for i in range(self.rows.shape[0])]
        if len(self.ids) != self.rows.shape[0]:
            raise ValueError(f"{len(self.ids)} ids for {self.rows.shape[0]} rows")
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("ids must be unique")

    @property
    def dim(self) -> int:
        return self.rows.shape[1]

    def __len__(self) -> int:
        return self.rows.shape[0]


def load_embeddings(path: str | Path, dim: int, ids: Optional[Sequence[str]] = None) -> EmbeddingMatrix:
    flat = np.fromfile(path, dtype="<f4")
    if flat.size % dim != 0:
        raise ValueError(f"{path}: {flat.size} floats is not a multiple of dim {dim}")
    rows = flat.reshape(-1, dim)
    return EmbeddingMatrix(rows=rows, ids=list(ids) if ids else [])


def save_embeddings(matrix: EmbeddingMatrix, path: str | Path) -> None:
    np.ascontiguousarray(matrix.rows, dtype="<f4").tofile(path)
