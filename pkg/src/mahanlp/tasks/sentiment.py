"""Sentiment analysis: positive / negative / neutral."""

from functools import lru_cache

from ._facade import TaskFacade
from .types import Prediction

SENTIMENT_LABELS = ("positive", "negative", "neutral")


class SentimentAnalyzer(TaskFacade):
    feature = "sentiment"

    def get_sentiment(self, text: str) -> Prediction:
        """Predicted sentiment class with its confidence."""
        self._require_text(text)
        out = self.backend.classify(text, SENTIMENT_LABELS)
        return Prediction(SENTIMENT_LABELS[out.label_index], out.score)

    def get_polarity_score(self, text: str) -> float:
        """Confidence score of the predicted sentiment class, in [0, 1]."""
        return self.get_sentiment(text).score


@lru_cache(maxsize=8)
def _analyzer(model_name: str | None, gpu_enabled: bool) -> SentimentAnalyzer:
    return SentimentAnalyzer(model_name=model_name, gpu_enabled=gpu_enabled)


def get_sentiment(text: str, model_name: str | None = None,
                  gpu_enabled: bool = False) -> Prediction:
    return _analyzer(model_name, gpu_enabled).get_sentiment(text)


def get_polarity_score(text: str, model_name: str | None = None,
                       gpu_enabled: bool = False) -> float:
    return _analyzer(model_name, gpu_enabled).get_polarity_score(text)
