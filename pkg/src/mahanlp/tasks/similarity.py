"""Sentence embeddings and cosine similarity scores."""

import math
from functools import lru_cache
from typing import Sequence

from ..errors import InputError
from ._facade import TaskFacade
from .types import SentenceEmbedding


def _cosine01(u: Sequence[float], v: Sequence[float]) -> float:
    """Cosine similarity clamped into [0, 1]; equal vectors score exactly 1."""
    norm_u = math.sqrt(sum(x * x for x in u))
    norm_v = math.sqrt(sum(y * y for y in v))
    if norm_u == 0.0 or norm_v == 0.0:
        return 0.0
    if tuple(u) == tuple(v):
        return 1.0
    dot = sum(x * y for x, y in zip(u, v))
    return min(1.0, max(0.0, dot / (norm_u * norm_v)))


class SimilarityScorer(TaskFacade):
    feature = "similarity"

    def embed_sentences(self, texts: Sequence[str]) -> list[SentenceEmbedding]:
        """One fixed-dimensional embedding per input text."""
        for i, text in enumerate(texts):
            if not isinstance(text, str) or not text.strip():
                raise InputError(f"text at index {i} must be a non-empty string")
        return [SentenceEmbedding(self.backend.embed(t).vector, t) for t in texts]

    def get_similarity_score(self, a: str, b: str) -> float:
        """Similarity of two sentences in [0, 1] (negative cosine clamps to 0)."""
        emb_a, emb_b = self.embed_sentences([a, b])
        return _cosine01(emb_a.vector, emb_b.vector)


@lru_cache(maxsize=8)
def _scorer(model_name: str | None, gpu_enabled: bool) -> SimilarityScorer:
    return SimilarityScorer(model_name=model_name, gpu_enabled=gpu_enabled)


def embed_sentences(texts: Sequence[str], model_name: str | None = None,
                    gpu_enabled: bool = False) -> list[SentenceEmbedding]:
    return _scorer(model_name, gpu_enabled).embed_sentences(texts)


def get_similarity_score(a: str, b: str, model_name: str | None = None,
                         gpu_enabled: bool = False) -> float:
    return _scorer(model_name, gpu_enabled).get_similarity_score(a, b)
