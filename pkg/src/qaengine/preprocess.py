"""Text normalization: tokenization, stoplisting and stemming.

Every part of the engine that needs terms goes through this module, so
summary scoring, index terms and query terms always live in the same
stem space.
"""
from __future__ import annotations

import hashlib
import re
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .porter import stem

__all__ = [
    "tokenize",
    "stem",
    "stem_tokens",
    "preprocess",
    "default_stoplist",
    "load_stoplist",
    "stoplist_digest",
]

# maximal runs of alphanumeric characters; underscores are punctuation here
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Lowercase and split into alphanumeric tokens, dropping punctuation."""
    return _TOKEN_RE.findall(text.lower())


def stem_tokens(text: str) -> list[str]:
    """Tokenize and stem, keeping order and duplicates (no stoplisting)."""
    return [stem(token) for token in tokenize(text)]


def preprocess(text: str, stoplist: frozenset[str] | None = None) -> list[str]:
    """Turn text into an ordered, deduplicated list of stems.

    Stopwords are removed on their surface form before stemming; the first
    occurrence of each stem fixes its position.
    """
    if stoplist is None:
        stoplist = default_stoplist()
    seen = set()
    terms = []
    for token in tokenize(text):
        if token in stoplist:
            continue
        stemmed = stem(token)
        if stemmed not in seen:
            seen.add(stemmed)
            terms.append(stemmed)
    return terms


@lru_cache(maxsize=1)
def default_stoplist() -> frozenset[str]:
    """The stoplist shipped with the package (common English function words)."""
    data = resources.files("qaengine.data").joinpath("stoplist.txt").read_text("utf-8")
    return frozenset(_parse_stoplist(data))


def load_stoplist(path: str | Path) -> frozenset[str]:
    return frozenset(_parse_stoplist(Path(path).read_text("utf-8")))


def _parse_stoplist(data: str) -> list[str]:
    words = []
    for line in data.splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.append(word)
    return words


def stoplist_digest(stoplist: frozenset[str]) -> str:
    """Stable fingerprint of a stoplist, used as index build metadata."""
    joined = "\n".join(sorted(stoplist))
    return hashlib.sha256(joined.encode("utf-8")).hexdigest()
