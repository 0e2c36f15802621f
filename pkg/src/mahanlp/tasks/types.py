"""Result records returned by the task APIs."""

from dataclasses import dataclass

from ..tokenizer import Token


@dataclass(frozen=True)
class Prediction:
    """A class label with the model's confidence for it."""

    label: str
    score: float


@dataclass(frozen=True)
class TaggedToken:
    """A word token with its named-entity label and per-token score."""

    token: Token
    label: str
    score: float


@dataclass(frozen=True)
class MaskFillResult:
    """One mask-fill candidate: the token, the completed sentence, its score."""

    token_str: str
    sequence: str
    score: float


@dataclass(frozen=True)
class SentenceEmbedding:
    """A fixed-length vector for one sentence."""

    vector: tuple[float, ...]
    source_text: str

    @property
    def dimension(self) -> int:
        return len(self.vector)
