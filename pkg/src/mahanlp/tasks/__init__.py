"""Task APIs with model choices defaulted away.

Each feature has a class (construct once, call many times) and module-level
convenience functions. All of them accept ``model_name`` for switching models
and ``gpu_enabled`` for GPU inference; leaving both alone uses the registered
default model on CPU.
"""

from . import autocomplete, hate, mask_fill, sentiment, similarity, tagger
from .autocomplete import AutoComplete
from .hate import HATE_LABELS, HateAnalyzer
from .mask_fill import MaskFill
from .sentiment import SENTIMENT_LABELS, SentimentAnalyzer
from .similarity import SimilarityScorer
from .tagger import NER_TAGS, NERTagger
from .types import MaskFillResult, Prediction, SentenceEmbedding, TaggedToken

__all__ = [
    "autocomplete", "hate", "mask_fill", "sentiment", "similarity", "tagger",
    "AutoComplete", "HateAnalyzer", "MaskFill", "NERTagger",
    "SentimentAnalyzer", "SimilarityScorer",
    "HATE_LABELS", "NER_TAGS", "SENTIMENT_LABELS",
    "MaskFillResult", "Prediction", "SentenceEmbedding", "TaggedToken",
]
