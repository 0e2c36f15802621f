"""Inference backend contract.

A backend provides five operations; task facades build their public results
on top of these. Each output record carries a ``truncated`` flag set when the
input exceeded the configured token budget and was cut at the backend
boundary.
"""

from dataclasses import dataclass
from typing import Protocol, Sequence, runtime_checkable


@dataclass(frozen=True)
class ClassifyOutput:
    label_index: int
    score: float
    truncated: bool = False


@dataclass(frozen=True)
class TagOutput:
    # One (tag index, score) pair per input token, in order.
    entries: tuple[tuple[int, float], ...]
    truncated: bool = False


@dataclass(frozen=True)
class GenerateOutput:
    words: tuple[str, ...]
    truncated: bool = False


@dataclass(frozen=True)
class MaskCandidate:
    token: str
    score: float


@dataclass(frozen=True)
class FillMaskOutput:
    # Sorted by score descending, ties by token ascending.
    candidates: tuple[MaskCandidate, ...]
    truncated: bool = False


@dataclass(frozen=True)
class EmbedOutput:
    vector: tuple[float, ...]
    truncated: bool = False


@runtime_checkable
class InferenceBackend(Protocol):
    """What a loaded model must be able to do.

    ``thread_safe`` declares whether one instance may serve concurrent
    read-only calls; callers must serialize access when it is False.
    """

    thread_safe: bool

    def classify(self, text: str, labels: Sequence[str]) -> ClassifyOutput: ...

    def tag(self, tokens: Sequence[str], tagset: Sequence[str]) -> TagOutput: ...

    def generate(self, text: str, n: int) -> GenerateOutput: ...

    def fill_mask(self, text: str, k: int) -> FillMaskOutput: ...

    def embed(self, text: str) -> EmbedOutput: ...
