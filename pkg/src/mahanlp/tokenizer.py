"""Devanagari-aware sentence segmentation and word tokenization.

Both tokenizers are pure functions over the input string and report spans as
codepoint offsets, so ``text[t.start:t.end] == t.text`` always holds.
"""

import re
from dataclasses import dataclass

__all__ = ["Token", "SentenceSpan", "sentence_tokenize", "word_tokenize"]

DANDA = "।"
DOUBLE_DANDA = "॥"

# A sentence ends after one of these when the next character is whitespace
# (or the string ends there).
SENTENCE_TERMINATORS = frozenset({DANDA, DOUBLE_DANDA, ".", "?", "!", "\n"})

# Punctuation peeled off the ends of whitespace-delimited chunks. Internal
# occurrences (e.g. hyphenated words) stay attached.
DETACHABLE_PUNCT = frozenset({DANDA, DOUBLE_DANDA, ".", ",", "?", "!",
                              "'", '"', "(", ")", "-"})

_NONSPACE_RUN = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    """A word or punctuation token with codepoint offsets into its source."""

    text: str
    start: int
    end: int


@dataclass(frozen=True)
class SentenceSpan:
    """A sentence with codepoint offsets into its source."""

    text: str
    start: int
    end: int


def sentence_tokenize(text: str) -> list[SentenceSpan]:
    """Split ``text`` into sentences.

    A boundary falls after a terminator (danda, double danda, ``.``, ``?``,
    ``!``, newline) that is followed by whitespace or the end of the string.
    The terminator stays inside its sentence; spans are trimmed of surrounding
    whitespace and empty spans are dropped.
    """
    spans: list[SentenceSpan] = []
    n = len(text)
    prev = 0
    for i, ch in enumerate(text):
        if ch in SENTENCE_TERMINATORS and (i + 1 == n or text[i + 1].isspace()):
            _append_trimmed(spans, text, prev, i + 1)
            prev = i + 1
    if prev < n:
        _append_trimmed(spans, text, prev, n)
    return spans


def _append_trimmed(spans: list[SentenceSpan], text: str, start: int, end: int) -> None:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start < end:
        spans.append(SentenceSpan(text[start:end], start, end))


def word_tokenize(text: str) -> list[Token]:
    """Split ``text`` into word tokens.

    Whitespace separates chunks; leading and trailing punctuation from
    ``DETACHABLE_PUNCT`` is then emitted as individual single-character
    tokens. No token contains whitespace.
    """
    tokens: list[Token] = []
    for m in _NONSPACE_RUN.finditer(text):
        chunk = m.group()
        base = m.start()
        lead = 0
        while lead < len(chunk) and chunk[lead] in DETACHABLE_PUNCT:
            lead += 1
        trail = len(chunk)
        while trail > lead and chunk[trail - 1] in DETACHABLE_PUNCT:
            trail -= 1
        for j in range(lead):
            tokens.append(Token(chunk[j], base + j, base + j + 1))
        if lead < trail:
            tokens.append(Token(chunk[lead:trail], base + lead, base + trail))
        for j in range(trail, len(chunk)):
            tokens.append(Token(chunk[j], base + j, base + j + 1))
    return tokens
