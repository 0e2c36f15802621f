"""Rule-based cleaning for raw Marathi text.

Three removal passes (URLs, non-Devanagari words, stopwords) plus a policy
object that composes them in a fixed order. All functions are pure and
idempotent; comparisons happen on NFC-normalized forms while the surviving
text keeps its original codepoints.
"""

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import ResourceError
from .tokenizer import DANDA, DOUBLE_DANDA, word_tokenize

__all__ = [
    "CleanPolicy",
    "StopwordList",
    "load_stopwords",
    "remove_urls",
    "remove_non_devanagari",
    "remove_stopwords",
    "clean",
]

STOPWORDS_RESOURCE = "stopwords_mr.txt"

# Scheme-prefixed or www.-prefixed runs of non-whitespace. A bare "www." must
# start its chunk; schemes match anywhere.
_URL_RE = re.compile(r"(?:(?:https?|ftp)://|(?<!\S)www\.)\S+", re.IGNORECASE)

_SPACE_RUN = re.compile(r" {2,}")
_VERSION_LINE = re.compile(r"#\s*version\s*:\s*(\S+)")

# Codepoints a surviving word token may consist of: the Devanagari block
# (which includes danda and double danda), Devanagari Extended, ASCII digits,
# and sentence punctuation.
_ALLOWED_RANGES = ((0x0900, 0x097F), (0xA8E0, 0xA8FF))
_ALLOWED_CHARS = frozenset("0123456789.,?!") | {DANDA, DOUBLE_DANDA}


@dataclass(frozen=True)
class CleanPolicy:
    """Which cleaning steps :func:`clean` applies.

    An all-false policy is the identity and returns the input unchanged.
    """

    remove_urls: bool = True
    remove_stopwords: bool = True
    remove_non_devanagari: bool = True
    collapse_whitespace: bool = True

    def any_enabled(self) -> bool:
        return (self.remove_urls or self.remove_stopwords
                or self.remove_non_devanagari or self.collapse_whitespace)


@dataclass(frozen=True)
class StopwordList:
    """A versioned, NFC-normalized set of Devanagari stopwords."""

    version: str
    words: frozenset[str]

    def __contains__(self, token: str) -> bool:
        return unicodedata.normalize("NFC", token) in self.words

    def __len__(self) -> int:
        return len(self.words)


def _is_devanagari_word(word: str) -> bool:
    for ch in word:
        cp = ord(ch)
        if any(lo <= cp <= hi for lo, hi in _ALLOWED_RANGES):
            continue
        if unicodedata.combining(ch):
            continue
        return False
    return bool(word)


def load_stopwords(path=None) -> StopwordList:
    """Load a stopword list resource.

    The file is UTF-8, one word per line, with ``#`` comment lines; a
    ``# version:`` comment carries the list version. Defaults to the packaged
    Marathi list.
    """
    if path is None:
        ref = resources.files(__package__) / "resources" / STOPWORDS_RESOURCE
        name = f"{__package__}/resources/{STOPWORDS_RESOURCE}"
    else:
        ref = path
        name = str(path)
    try:
        raw = ref.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as exc:
        raise ResourceError(f"stopword list not found: {name}", path=name) from exc

    version = "unversioned"
    words = set()
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _VERSION_LINE.match(line)
            if m:
                version = m.group(1)
            continue
        word = unicodedata.normalize("NFC", line)
        if not _is_devanagari_word(word):
            raise ResourceError(
                f"stopword list {name} line {lineno}: "
                f"{word!r} contains non-Devanagari codepoints",
                path=name,
            )
        words.add(word)
    return StopwordList(version=version, words=frozenset(words))


@lru_cache(maxsize=1)
def default_stopwords() -> StopwordList:
    return load_stopwords()


def remove_urls(text: str) -> str:
    """Drop URL-shaped substrings, replacing each with a single space.

    Runs of spaces are then collapsed and spaces at either end removed; other
    whitespace (newlines, tabs) is left alone.
    """
    cleaned = _URL_RE.sub(" ", text)
    return _SPACE_RUN.sub(" ", cleaned).strip(" ")


def remove_non_devanagari(text: str) -> str:
    """Keep only word tokens written in Devanagari.

    Tokens are whitespace-delimited; a token survives only if every codepoint
    is Devanagari, an ASCII digit, or sentence punctuation (``. , ? !`` and
    the danda marks). Offending tokens are dropped whole; survivors are
    joined with single spaces.
    """
    kept = [tok for tok in text.split() if _token_allowed(tok)]
    return " ".join(kept)


def _token_allowed(token: str) -> bool:
    for ch in token:
        cp = ord(ch)
        if ch in _ALLOWED_CHARS:
            continue
        if any(lo <= cp <= hi for lo, hi in _ALLOWED_RANGES):
            continue
        return False
    return True


def remove_stopwords(text: str, stopwords: StopwordList | None = None) -> str:
    """Drop stopword tokens from ``text``.

    Tokenization follows :func:`mahanlp.tokenizer.word_tokenize`; membership
    is exact match on the NFC form. Survivors are joined with single spaces.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    kept = [t.text for t in word_tokenize(text)
            if unicodedata.normalize("NFC", t.text) not in stopwords.words]
    return " ".join(kept)


def clean(text: str, policy: CleanPolicy | None = None,
          stopwords: StopwordList | None = None) -> str:
    """Apply the enabled cleaning steps in fixed order.

    Order: URL removal, non-Devanagari filtering, stopword removal,
    whitespace collapse. Equal to composing the individual functions by hand.
    """
    if policy is None:
        policy = CleanPolicy()
    if not policy.any_enabled():
        return text
    out = text
    if policy.remove_urls:
        out = remove_urls(out)
    if policy.remove_non_devanagari:
        out = remove_non_devanagari(out)
    if policy.remove_stopwords:
        out = remove_stopwords(out, stopwords)
    if policy.collapse_whitespace:
        out = " ".join(out.split())
    return out
