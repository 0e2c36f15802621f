"""Deterministic hash-driven backend.

Every operation is a pure function of the NFC-normalized input, computed from
an FNV-1a 64-bit hash, so results are identical across processes and
platforms and can be reproduced by hand. Useful for offline work, tests, and
pipeline plumbing where a real model is not needed.

Definitions (h = FNV-1a 64 over the UTF-8 bytes of the NFC-normalized text):

* classify: label index ``h % len(labels)``, score ``0.5 + (h % 4096) / 8192``
* tag: per token, same index/score formulas on that token's own hash
* generate: word i is ``vocab[(h + i) % 16]`` over the packaged 16-word
  vocabulary
* fill_mask: candidate j (vocabulary order) gets raw weight
  ``(rotl64(h, j) % 1000) + 1``; scores are weights normalized to sum 1;
  the top k are returned ordered by score descending, ties by token ascending
* embed: 16 dimensions, ``v_i = ((h >> (4 * (i % 16))) & 0xF) / 15``, with h
  re-hashed over its 8 little-endian bytes after every 16 dimensions

Inputs longer than ``max_input_tokens`` whitespace-separated tokens are cut
to the first ``max_input_tokens`` tokens (re-joined with single spaces)
before hashing, and the output's ``truncated`` flag is set.
"""

import struct
import unicodedata
from functools import lru_cache
from importlib import resources
from typing import Sequence

from ..errors import InputError, ResourceError
from .base import (
    ClassifyOutput,
    EmbedOutput,
    FillMaskOutput,
    GenerateOutput,
    MaskCandidate,
    TagOutput,
)

__all__ = ["StubBackend", "fnv1a64", "hash_text", "load_stub_vocab",
           "EMBED_DIM", "VOCAB_RESOURCE"]

VOCAB_RESOURCE = "stub_vocab.txt"
VOCAB_SIZE = 16
EMBED_DIM = 16

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def fnv1a64(data: bytes) -> int:
    """FNV-1a 64-bit hash."""
    h = _FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & _MASK64
    return h


def hash_text(text: str) -> int:
    """Hash the NFC form of ``text``; every stub operation starts here."""
    return fnv1a64(unicodedata.normalize("NFC", text).encode("utf-8"))


def _rotl64(value: int, amount: int) -> int:
    amount &= 63
    if not amount:
        return value
    return ((value << amount) & _MASK64) | (value >> (64 - amount))


@lru_cache(maxsize=1)
def load_stub_vocab() -> tuple[str, ...]:
    """The packaged 16-word Devanagari vocabulary, in file order."""
    ref = resources.files("mahanlp") / "resources" / VOCAB_RESOURCE
    try:
        raw = ref.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as exc:
        raise ResourceError(f"stub vocabulary not found: {VOCAB_RESOURCE}",
                            path=VOCAB_RESOURCE) from exc
    vocab = tuple(line.strip() for line in raw.splitlines() if line.strip())
    if len(vocab) != VOCAB_SIZE:
        raise ResourceError(
            f"stub vocabulary must hold exactly {VOCAB_SIZE} words, "
            f"found {len(vocab)}",
            path=VOCAB_RESOURCE,
        )
    return vocab


class StubBackend:
    """Offline deterministic backend; ignores the GPU flag."""

    thread_safe = True

    def __init__(self, config=None):
        from ..model_registry import BackendConfig  # circular at module level

        self.config = config if config is not None else BackendConfig()
        self.vocab = load_stub_vocab()

    def _cut(self, text: str) -> tuple[str, bool]:
        limit = self.config.max_input_tokens
        tokens = text.split()
        if len(tokens) <= limit:
            return text, False
        return " ".join(tokens[:limit]), True

    @staticmethod
    def _score(h: int) -> float:
        return 0.5 + (h % 4096) / 8192

    def classify(self, text: str, labels: Sequence[str]) -> ClassifyOutput:
        if not labels:
            raise InputError("classify requires at least one label")
        text, truncated = self._cut(text)
        h = hash_text(text)
        return ClassifyOutput(h % len(labels), self._score(h), truncated)

    def tag(self, tokens: Sequence[str], tagset: Sequence[str]) -> TagOutput:
        if not tagset:
            raise InputError("tag requires a non-empty tagset")
        truncated = len(tokens) > self.config.max_input_tokens
        kept = tokens[: self.config.max_input_tokens]
        entries = []
        for tok in kept:
            h = hash_text(tok)
            entries.append((h % len(tagset), self._score(h)))
        return TagOutput(tuple(entries), truncated)

    def generate(self, text: str, n: int) -> GenerateOutput:
        if n < 0:
            raise InputError(f"word count must be non-negative, got {n}")
        text, truncated = self._cut(text)
        h = hash_text(text)
        words = tuple(self.vocab[(h + i) % VOCAB_SIZE] for i in range(n))
        return GenerateOutput(words, truncated)

    def fill_mask(self, text: str, k: int) -> FillMaskOutput:
        if k < 1:
            raise InputError(f"k must be >= 1, got {k}")
        if k > VOCAB_SIZE:
            raise InputError(
                f"k must be <= {VOCAB_SIZE} (stub candidate vocabulary size), got {k}")
        text, truncated = self._cut(text)
        h = hash_text(text)
        weights = [(_rotl64(h, j) % 1000) + 1 for j in range(VOCAB_SIZE)]
        total = sum(weights)
        scored = [MaskCandidate(tok, w / total)
                  for tok, w in zip(self.vocab, weights)]
        scored.sort(key=lambda c: (-c.score, c.token))
        return FillMaskOutput(tuple(scored[:k]), truncated)

    def embed(self, text: str) -> EmbedOutput:
        text, truncated = self._cut(text)
        h = hash_text(text)
        comps = []
        for i in range(EMBED_DIM):
            if i and i % 16 == 0:
                h = fnv1a64(struct.pack("<Q", h))
            comps.append(((h >> (4 * (i % 16))) & 0xF) / 15)
        return EmbedOutput(tuple(comps), truncated)
