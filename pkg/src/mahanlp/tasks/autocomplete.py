"""Next-word prediction and sentence completion."""

from functools import lru_cache

from ..errors import InputError
from ._facade import TaskFacade

_SENTENCE_END = ("।", "॥", ".", "?", "!")


class AutoComplete(TaskFacade):
    feature = "autocomplete"

    def next_word(self, text: str, n: int = 1) -> list[str]:
        """The next ``n`` predicted words after ``text``."""
        self._require_text(text)
        if n < 1:
            raise InputError(f"n must be >= 1, got {n}")
        return list(self.backend.generate(text, n).words)

    def complete_sentence(self, text: str, max_new_words: int) -> str:
        """Extend ``text`` by up to ``max_new_words`` predicted words.

        The result starts with ``text`` verbatim; generation stops early when
        a predicted word ends with a sentence terminator.
        """
        self._require_text(text)
        if max_new_words < 1:
            raise InputError(f"max_new_words must be >= 1, got {max_new_words}")
        words = self.backend.generate(text, max_new_words).words
        out = text
        for word in words:
            sep = "" if out[-1].isspace() else " "
            out = out + sep + word
            if word.endswith(_SENTENCE_END):
                break
        return out


@lru_cache(maxsize=8)
def _completer(model_name: str | None, gpu_enabled: bool) -> AutoComplete:
    return AutoComplete(model_name=model_name, gpu_enabled=gpu_enabled)


def next_word(text: str, n: int = 1, model_name: str | None = None,
              gpu_enabled: bool = False) -> list[str]:
    return _completer(model_name, gpu_enabled).next_word(text, n)


def complete_sentence(text: str, max_new_words: int,
                      model_name: str | None = None,
                      gpu_enabled: bool = False) -> str:
    return _completer(model_name, gpu_enabled).complete_sentence(text, max_new_words)
