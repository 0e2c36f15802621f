"""Named-entity tagging with flat per-token labels."""

from functools import lru_cache

from ..tokenizer import Token, word_tokenize
from ._facade import TaskFacade
from .types import TaggedToken

# Seven entity types plus O for everything else.
NER_TAGS = ("O", "NEP", "NEL", "NEO", "NEM", "NETI", "NED", "ED")


class NERTagger(TaskFacade):
    feature = "tagger"

    def get_tokens(self, text: str) -> list[Token]:
        """Word tokens of ``text``; same output as the tokenizer module."""
        return word_tokenize(text)

    def get_token_labels(self, text: str) -> list[TaggedToken]:
        """One entity label and score per word token, aligned with get_tokens.

        Inputs longer than the backend token budget are tagged in chunks so
        the alignment holds for any length.
        """
        tokens = word_tokenize(text)
        if not tokens:
            return []
        texts = [t.text for t in tokens]
        limit = self.config.max_input_tokens
        tagged: list[TaggedToken] = []
        for i in range(0, len(texts), limit):
            out = self.backend.tag(texts[i:i + limit], NER_TAGS)
            for token, (index, score) in zip(tokens[i:i + limit], out.entries):
                tagged.append(TaggedToken(token, NER_TAGS[index], score))
        return tagged


@lru_cache(maxsize=8)
def _tagger(model_name: str | None, gpu_enabled: bool) -> NERTagger:
    return NERTagger(model_name=model_name, gpu_enabled=gpu_enabled)


def get_tokens(text: str, model_name: str | None = None,
               gpu_enabled: bool = False) -> list[Token]:
    return _tagger(model_name, gpu_enabled).get_tokens(text)


def get_token_labels(text: str, model_name: str | None = None,
                     gpu_enabled: bool = False) -> list[TaggedToken]:
    return _tagger(model_name, gpu_enabled).get_token_labels(text)
