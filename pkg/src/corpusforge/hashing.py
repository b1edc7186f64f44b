"""Stable hashes used across the toolkit.

Two hash families, both fixed so that artifacts are reproducible across
platforms and Python versions (``hash()`` is salted per process and never
used here):

- FNV-1a 64-bit: feature bucketing for the n-gram featurizer.
- XXH3-64 integer digests: paragraph/sentence digests in mined-bitext
  metadata files, delegated to the ``xxhash`` C library for bit-exact
  compatibility with existing metadata.
"""

from __future__ import annotations

import xxhash

FNV64_OFFSET_BASIS = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


def fnv1a_64(data: bytes) -> int:
    """FNV-1a 64-bit hash of a byte string."""
    h = FNV64_OFFSET_BASIS
    for byte in data:
        h ^= byte
        h = (h * FNV64_PRIME) & _MASK64
    return h


def fnv1a_64_text(text: str) -> int:
    """FNV-1a 64-bit hash of the UTF-8 encoding of ``text``."""
    return fnv1a_64(text.encode("utf-8"))


def text_digest(text: str) -> int:
    """XXH3-64 integer digest of the UTF-8 encoding of ``text``.

    This is the digest stored in the ``paragraph_digest`` and
    ``sentence_digest`` columns of mined-bitext metadata files.
    """
    return xxhash.xxh3_64_intdigest(text.encode("utf-8"))
