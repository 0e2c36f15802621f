"""Hate speech detection: hate / non-hate."""

from functools import lru_cache

from ._facade import TaskFacade
from .types import Prediction

HATE_LABELS = ("hate", "non-hate")


class HateAnalyzer(TaskFacade):
    feature = "hate"

    def get_hate(self, text: str) -> Prediction:
        """Predicted hate class with its confidence."""
        self._require_text(text)
        out = self.backend.classify(text, HATE_LABELS)
        return Prediction(HATE_LABELS[out.label_index], out.score)

    def get_hate_score(self, text: str) -> float:
        """Confidence score of the predicted hate class, in [0, 1]."""
        return self.get_hate(text).score


@lru_cache(maxsize=8)
def _analyzer(model_name: str | None, gpu_enabled: bool) -> HateAnalyzer:
    return HateAnalyzer(model_name=model_name, gpu_enabled=gpu_enabled)


def get_hate(text: str, model_name: str | None = None,
             gpu_enabled: bool = False) -> Prediction:
    return _analyzer(model_name, gpu_enabled).get_hate(text)


def get_hate_score(text: str, model_name: str | None = None,
                   gpu_enabled: bool = False) -> float:
    return _analyzer(model_name, gpu_enabled).get_hate_score(text)
