"""Extractive summarization by normalized stem-frequency scoring.

A sentence scores the sum of freq(stem)/max_freq over its non-stopword
stems, frequencies taken over the whole text.  Sentences are picked in
descending score order (earlier sentence wins ties) while the summary stays
within ceil(ratio * total words); the top scorer is always kept so no page
ends up unsearchable.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyText, FormatError
from .preprocess import default_stoplist, stem, tokenize

__all__ = ["Sentence", "Summary", "split_sentences", "summarize", "SummaryStore"]

_TERMINATORS = ".!?"


@dataclass(frozen=True)
class Sentence:
    sid: int          # 1-based position within the summary
    text: str
    source_pos: int   # 0-based position within the original text


@dataclass(frozen=True)
class Summary:
    pid: int
    sentences: tuple[Sentence, ...]
    word_count: int


def _is_abbreviation_period(text: str, i: int) -> bool:
    """True when the period at text[i] ends a lone capital letter ("A. K.")."""
    if i == 0 or text[i] != ".":
        return False
    if not text[i - 1].isupper():
        return False
    return i - 2 < 0 or not text[i - 2].isalnum()


def split_sentences(text: str) -> list[str]:
    """Split on '.', '!' or '?' followed by whitespace or end of text."""
    sentences: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in _TERMINATORS:
            j = i
            while j + 1 < n and text[j + 1] in _TERMINATORS:
                j += 1
            boundary = (j + 1 >= n) or text[j + 1].isspace()
            if boundary and not _is_abbreviation_period(text, i):
                piece = text[start : j + 1].strip()
                if piece:
                    sentences.append(piece)
                start = j + 1
            i = j + 1
        else:
            i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _sentence_words(sentence: str) -> int:
    return len(sentence.split())


def summarize(
    text: str,
    ratio: float = 0.5,
    *,
    stoplist: frozenset[str] | None = None,
    pid: int = 0,
) -> Summary:
    """Extract the highest-scoring sentences of ``text`` within the word budget."""
    if not 0 < ratio <= 1:
        raise ValueError(f"ratio must be in (0, 1], got {ratio}")
    if stoplist is None:
        stoplist = default_stoplist()
    sentences = split_sentences(text)
    if not sentences:
        raise EmptyText("no sentences to summarize")

    sentence_stems = [
        [stem(tok) for tok in tokenize(s) if tok not in stoplist] for s in sentences
    ]
    freq = Counter(st for stems in sentence_stems for st in stems)
    max_freq = max(freq.values()) if freq else 1
    scores = [sum(freq[st] / max_freq for st in stems) for stems in sentence_stems]

    total_words = len(text.split())
    budget = math.ceil(ratio * total_words)

    by_score = sorted(range(len(sentences)), key=lambda i: (-scores[i], i))
    selected: list[int] = []
    used = 0
    for idx in by_score:
        words = _sentence_words(sentences[idx])
        if not selected:
            selected.append(idx)
            used = words
        elif used + words <= budget:
            selected.append(idx)
            used += words
    selected.sort()

    picked = tuple(
        Sentence(sid=k + 1, text=sentences[idx], source_pos=idx)
        for k, idx in enumerate(selected)
    )
    return Summary(pid=pid, sentences=picked, word_count=used)


class SummaryStore:
    """All summaries of a corpus, addressable by (pid, sid)."""

    def __init__(self, records: list[tuple[int, int, str]] | None = None):
        self._texts: dict[tuple[int, int], str] = {}
        for pid, sid, text in records or []:
            self._texts[(pid, sid)] = text

    @classmethod
    def from_summaries(cls, summaries: list[Summary]) -> "SummaryStore":
        store = cls()
        for summary in summaries:
            for sentence in summary.sentences:
                store._texts[(summary.pid, sentence.sid)] = sentence.text
        return store

    def add(self, pid: int, sid: int, text: str) -> None:
        self._texts[(pid, sid)] = text

    def get(self, pid: int, sid: int) -> str:
        return self._texts[(pid, sid)]

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._texts

    def __len__(self) -> int:
        return len(self._texts)

    def __eq__(self, other) -> bool:
        return isinstance(other, SummaryStore) and self._texts == other._texts

    def sentences(self):
        """Iterate (pid, sid, text) sorted by (pid, sid)."""
        for (pid, sid), text in sorted(self._texts.items()):
            yield pid, sid, text

    @property
    def page_count(self) -> int:
        return len({pid for pid, _ in self._texts})

    @property
    def sentence_count(self) -> int:
        return len(self._texts)

    @property
    def digest(self) -> str:
        import hashlib

        h = hashlib.sha256()
        for pid, sid, text in self.sentences():
            h.update(f"{pid}\t{sid}\t{text}\n".encode("utf-8"))
        return h.hexdigest()

    def save(self, path: str | Path) -> None:
        lines = [
            json.dumps({"pid": pid, "sid": sid, "text": text}, ensure_ascii=False, sort_keys=True)
            for pid, sid, text in self.sentences()
        ]
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "SummaryStore":
        store = cls()
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                store.add(int(rec["pid"]), int(rec["sid"]), rec["text"])
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"{path}:{lineno}: bad summary record: {exc}") from exc
        return store
