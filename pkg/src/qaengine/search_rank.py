"""Answer retrieval from the index and feedback-driven ordering.

Searching resolves every query term to its postings; a term lives under
exactly one answer type, so this is a lookup across the whole index, term by
term.  (The class -> answer-type mapping travels with the query as the
expected focus, but term postings decide the hits: a query for
"President, USA" must surface the USA sentence even though USA is indexed
as a Location and the question class was Who.)

Ranking sorts by net feedback (likes - dislikes), then by how many query
terms a sentence matched, then by (pid, sid) for a stable total order.
"""
from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError, StoreMismatch
from .indexer import QCIndex
from .qclassify import Query
from .summarizer import SummaryStore

__all__ = ["AnswerHit", "RankedAnswer", "FeedbackStore", "search", "record_feedback", "rank"]

VOTES = ("like", "dislike")


@dataclass(frozen=True)
class AnswerHit:
    pid: int
    sid: int
    text: str
    matched_terms: int


@dataclass(frozen=True)
class RankedAnswer:
    hit: AnswerHit
    feedback_score: int
    rank: int


def search(index: QCIndex, query: Query, summaries: SummaryStore) -> list[AnswerHit]:
    """Sentences whose postings contain at least one query term.

    Raises StoreMismatch when the index was not built over ``summaries``.
    Returns hits ordered by (pid, sid); rank() applies the real ordering.
    """
    if index.meta.summaries_digest != summaries.digest:
        raise StoreMismatch("index and summary store come from different builds")

    matched: dict[tuple[int, int], set[str]] = {}
    for term in query.terms:
        found = index.lookup_term(term)
        if found is None:
            continue
        _answer_type, postings = found
        for posting in postings:
            matched.setdefault((posting.pid, posting.sid), set()).add(term)

    return [
        AnswerHit(pid=pid, sid=sid, text=summaries.get(pid, sid), matched_terms=len(terms))
        for (pid, sid), terms in sorted(matched.items())
    ]


class FeedbackStore:
    """Per-(pid, sid) like/dislike tallies backed by an append-only log."""

    def __init__(self, path: str | Path | None = None):
        self._path = Path(path) if path is not None else None
        self._counts: dict[tuple[int, int], list[int]] = {}
        self._lock = threading.Lock()
        if self._path is not None and self._path.exists():
            self._replay(self._path)

    def _replay(self, path: Path) -> None:
        for lineno, line in enumerate(path.read_text("utf-8").splitlines(), 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                key = (int(rec["pid"]), int(rec["sid"]))
                vote = rec["vote"]
                if vote not in VOTES:
                    raise ValueError(f"bad vote {vote!r}")
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"{path}:{lineno}: bad feedback entry: {exc}") from exc
            counts = self._counts.setdefault(key, [0, 0])
            counts[0 if vote == "like" else 1] += 1

    def record(self, pid: int, sid: int, vote: str) -> tuple[int, int]:
        """Apply one vote and durably append it; returns (likes, dislikes)."""
        if vote not in VOTES:
            raise ValueError(f"vote must be one of {VOTES}, got {vote!r}")
        with self._lock:
            if self._path is not None:
                entry = json.dumps(
                    {"timestamp": time.time(), "pid": pid, "sid": sid, "vote": vote},
                    sort_keys=True,
                )
                with self._path.open("a", encoding="utf-8") as fh:
                    fh.write(entry + "\n")
                    fh.flush()
                    import os

                    os.fsync(fh.fileno())
            counts = self._counts.setdefault((pid, sid), [0, 0])
            counts[0 if vote == "like" else 1] += 1
            return counts[0], counts[1]

    def counts(self, pid: int, sid: int) -> tuple[int, int]:
        likes, dislikes = self._counts.get((pid, sid), (0, 0))
        return likes, dislikes

    def score(self, pid: int, sid: int) -> int:
        likes, dislikes = self.counts(pid, sid)
        return likes - dislikes

    def reset(self) -> None:
        with self._lock:
            self._counts.clear()

    def __len__(self) -> int:
        return len(self._counts)


def record_feedback(store: FeedbackStore, key: tuple[int, int], vote: str) -> FeedbackStore:
    pid, sid = key
    store.record(pid, sid, vote)
    return store


def rank(hits: list[AnswerHit], store: FeedbackStore) -> list[RankedAnswer]:
    """Total order: feedback desc, matched terms desc, then pid, sid asc."""
    ordered = sorted(
        hits,
        key=lambda h: (-store.score(h.pid, h.sid), -h.matched_terms, h.pid, h.sid),
    )
    return [
        RankedAnswer(hit=hit, feedback_score=store.score(hit.pid, hit.sid), rank=i + 1)
        for i, hit in enumerate(ordered)
    ]
