"""mahaNLP: a Marathi (Devanagari-script) text analysis toolkit.

Two ways in:

* the simple tier — import a task and call it, model choices are defaulted::

      from mahanlp.tasks import SentimentAnalyzer
      SentimentAnalyzer(model_name="stub").get_sentiment("मी घरी जातो")

* the model tier — list, pick, and load models explicitly::

      from mahanlp import model_registry
      desc = model_registry.resolve("sentiment", "l3cube-pune/MarathiSentiment")
      backend = model_registry.load_backend(desc)

Rule-based preprocessing (``mahanlp.preprocess``), tokenization
(``mahanlp.tokenizer``), and cached corpus loading (``mahanlp.datasets``)
need no models at all.
"""

from . import datasets, errors, model_registry, preprocess, tokenizer
from .errors import MahaNLPError
from .model_registry import BackendConfig, ModelDescriptor
from .preprocess import CleanPolicy, StopwordList, clean
from .tokenizer import SentenceSpan, Token, sentence_tokenize, word_tokenize

__version__ = "0.1.0"

__all__ = [
    "datasets", "errors", "model_registry", "preprocess", "tokenizer",
    "MahaNLPError", "BackendConfig", "ModelDescriptor",
    "CleanPolicy", "StopwordList", "clean",
    "SentenceSpan", "Token", "sentence_tokenize", "word_tokenize",
    "__version__",
]
