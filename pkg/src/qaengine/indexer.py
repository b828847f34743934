"""Answer-type classification of terms and the answer-type inverted index.

Each term is classified once: its dictionary definition is tokenized and
stemmed, and the first gazetteer keyword (in gazetteer order) found in the
definition decides the answer type.  Terms without a definition, or whose
definition matches no keyword, fall back to Definition.  The index then maps
answer type -> stem -> postings, where a posting locates a summary sentence.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import EmptySummaryStore, FormatError, StalePreprocessorError
from .preprocess import (
    default_stoplist,
    preprocess,
    stem_tokens,
    stoplist_digest,
)
from .summarizer import SummaryStore

__all__ = [
    "AnswerType",
    "Gazetteer",
    "DictionaryProvider",
    "Posting",
    "IndexMeta",
    "QCIndex",
    "classify_term",
    "build_index",
    "save_index",
    "load_index",
]


class AnswerType(Enum):
    PERSON = "person"
    ORGANIZATION = "organization"
    LOCATION = "location"
    MONEY = "money"
    NUMBER = "number"
    DEFINITION = "definition"
    PROCEDURE = "procedure"
    ABBREVIATION = "abbreviation"
    YEAR = "year"
    MONTH = "month"
    DAY = "day"
    TIME = "time"
    REASON = "reason"

    @classmethod
    def parse(cls, name: str) -> "AnswerType":
        """Case-insensitive parse; "process" is accepted as Procedure."""
        lowered = name.strip().lower()
        if lowered == "process":
            return cls.PROCEDURE
        try:
            return cls(lowered)
        except ValueError:
            raise FormatError(f"unknown answer type: {name!r}") from None


# Keyword table mapping a term description onto its answer type.  Order
# matters: the first keyword found in a definition wins.  Multi-word
# keywords match as contiguous stem sequences.
_DEFAULT_GAZETTEER: tuple[tuple[str, AnswerType], ...] = (
    ("government-agency", AnswerType.ORGANIZATION),
    ("agency", AnswerType.ORGANIZATION),
    ("company", AnswerType.ORGANIZATION),
    ("airline", AnswerType.ORGANIZATION),
    ("university", AnswerType.ORGANIZATION),
    ("institute", AnswerType.ORGANIZATION),
    ("sports-team", AnswerType.ORGANIZATION),
    ("leader", AnswerType.PERSON),
    ("father", AnswerType.PERSON),
    ("mother", AnswerType.PERSON),
    ("sister", AnswerType.PERSON),
    ("brother", AnswerType.PERSON),
    ("king", AnswerType.PERSON),
    ("queen", AnswerType.PERSON),
    ("emperor", AnswerType.PERSON),
    ("name", AnswerType.PERSON),
    ("city", AnswerType.LOCATION),
    ("country", AnswerType.LOCATION),
    ("state", AnswerType.LOCATION),
    ("territory", AnswerType.LOCATION),
    ("mountain", AnswerType.LOCATION),
    ("island", AnswerType.LOCATION),
    ("star", AnswerType.LOCATION),
    ("constellation", AnswerType.LOCATION),
    ("street", AnswerType.LOCATION),
    ("land", AnswerType.LOCATION),
    ("currency", AnswerType.MONEY),
    ("full form", AnswerType.ABBREVIATION),
    ("quantity", AnswerType.NUMBER),
    ("distance", AnswerType.NUMBER),
    ("procedure", AnswerType.PROCEDURE),
    ("method", AnswerType.PROCEDURE),
    ("process", AnswerType.PROCEDURE),
    ("day", AnswerType.DAY),
    ("monday", AnswerType.DAY),
    ("tuesday", AnswerType.DAY),
    ("wednesday", AnswerType.DAY),
    ("thursday", AnswerType.DAY),
    ("friday", AnswerType.DAY),
    ("saturday", AnswerType.DAY),
    ("sunday", AnswerType.DAY),
    ("am", AnswerType.TIME),
    ("pm", AnswerType.TIME),
    ("year", AnswerType.YEAR),
    ("january", AnswerType.MONTH),
    ("february", AnswerType.MONTH),
    ("march", AnswerType.MONTH),
    ("april", AnswerType.MONTH),
    ("may", AnswerType.MONTH),
    ("june", AnswerType.MONTH),
    ("july", AnswerType.MONTH),
    ("august", AnswerType.MONTH),
    ("september", AnswerType.MONTH),
    ("october", AnswerType.MONTH),
    ("november", AnswerType.MONTH),
    ("december", AnswerType.MONTH),
)


@dataclass(frozen=True)
class GazetteerEntry:
    keyword: tuple[str, ...]  # stem sequence; single words are 1-tuples
    answer_type: AnswerType


class Gazetteer:
    """Ordered keyword -> answer-type table; keywords are stored stemmed."""

    def __init__(self, pairs):
        entries = []
        seen = set()
        for surface, answer_type in pairs:
            keyword = tuple(stem_tokens(surface))
            if not keyword:
                raise ValueError(f"gazetteer keyword {surface!r} has no tokens")
            if keyword in seen:
                raise ValueError(f"duplicate gazetteer keyword: {surface!r}")
            seen.add(keyword)
            entries.append(GazetteerEntry(keyword, answer_type))
        self.entries: tuple[GazetteerEntry, ...] = tuple(entries)

    @classmethod
    def default(cls) -> "Gazetteer":
        return cls(_DEFAULT_GAZETTEER)

    @classmethod
    def load(cls, path: str | Path) -> "Gazetteer":
        """Read "keyword<TAB>answer_type" lines, order preserved."""
        pairs = []
        for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "\t" not in line:
                raise FormatError(f"{path}:{lineno}: expected keyword<TAB>answer_type")
            keyword, type_name = line.split("\t", 1)
            pairs.append((keyword, AnswerType.parse(type_name)))
        return cls(pairs)

    def classify(self, definition: str) -> AnswerType | None:
        """First entry whose stem sequence occurs in the stemmed definition."""
        stems = stem_tokens(definition)
        for entry in self.entries:
            k = len(entry.keyword)
            if k == 1:
                if entry.keyword[0] in stems:
                    return entry.answer_type
            else:
                for i in range(len(stems) - k + 1):
                    if tuple(stems[i : i + k]) == entry.keyword:
                        return entry.answer_type
        return None

    @property
    def digest(self) -> str:
        h = hashlib.sha256()
        for entry in self.entries:
            h.update(f"{' '.join(entry.keyword)}\t{entry.answer_type.value}\n".encode("utf-8"))
        return h.hexdigest()


class DictionaryProvider:
    """Offline term -> definition lookup; terms are matched after stemming."""

    def __init__(self, definitions: dict[str, str] | None = None):
        # keys are stored stemmed; later entries override earlier ones
        self._definitions: dict[str, str] = {}
        for term, definition in (definitions or {}).items():
            self.add(term, definition)

    def add(self, term: str, definition: str) -> None:
        stems = stem_tokens(term)
        if len(stems) != 1:
            raise ValueError(f"dictionary term must be a single word: {term!r}")
        self._definitions[stems[0]] = definition

    @classmethod
    def from_file(cls, path: str | Path) -> "DictionaryProvider":
        """One JSON record per line: {"term": ..., "definition": ...}."""
        provider = cls()
        for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                provider.add(rec["term"], rec["definition"])
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"{path}:{lineno}: bad dictionary record: {exc}") from exc
        return provider

    def __call__(self, term: str) -> str | None:
        return self._definitions.get(term)

    def __len__(self) -> int:
        return len(self._definitions)


def classify_term(term: str, provider, gazetteer: Gazetteer) -> AnswerType:
    """Answer type of a stemmed term via its definition; Definition on no match."""
    definition = provider(term)
    if definition is None:
        return AnswerType.DEFINITION
    matched = gazetteer.classify(definition)
    return matched if matched is not None else AnswerType.DEFINITION


@dataclass(frozen=True, order=True)
class Posting:
    sid: int
    pid: int


@dataclass(frozen=True)
class IndexMeta:
    stoplist_digest: str
    gazetteer_digest: str
    summaries_digest: str


class QCIndex:
    """Answer type -> stem -> postings, one answer type per stem."""

    def __init__(self, meta: IndexMeta):
        self.meta = meta
        self._postings: dict[AnswerType, dict[str, set[Posting]]] = {}
        self._term_type: dict[str, AnswerType] = {}

    def add(self, answer_type: AnswerType, term: str, posting: Posting) -> None:
        existing = self._term_type.get(term)
        if existing is not None and existing != answer_type:
            raise ValueError(
                f"term {term!r} already indexed under {existing.value}, got {answer_type.value}"
            )
        self._term_type[term] = answer_type
        self._postings.setdefault(answer_type, {}).setdefault(term, set()).add(posting)

    def lookup_term(self, term: str) -> tuple[AnswerType, frozenset[Posting]] | None:
        answer_type = self._term_type.get(term)
        if answer_type is None:
            return None
        return answer_type, frozenset(self._postings[answer_type][term])

    def postings(self, answer_type: AnswerType, term: str) -> frozenset[Posting]:
        return frozenset(self._postings.get(answer_type, {}).get(term, set()))

    def term_type(self, term: str) -> AnswerType | None:
        return self._term_type.get(term)

    def terms(self) -> list[str]:
        return sorted(self._term_type)

    def triples(self):
        """Iterate (answer_type, term, posting) over the whole index."""
        for answer_type in sorted(self._postings, key=lambda a: a.value):
            for term in sorted(self._postings[answer_type]):
                for posting in sorted(self._postings[answer_type][term]):
                    yield answer_type, term, posting

    def terms_per_type(self) -> dict[AnswerType, int]:
        """Distinct term count for every answer type (zeros included)."""
        return {a: len(self._postings.get(a, {})) for a in AnswerType}

    def __len__(self) -> int:
        return sum(len(p) for terms in self._postings.values() for p in terms.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QCIndex)
            and self.meta == other.meta
            and self._postings == other._postings
        )


def build_index(
    summaries: SummaryStore,
    provider,
    gazetteer: Gazetteer | None = None,
    stoplist: frozenset[str] | None = None,
) -> QCIndex:
    """Classify every summary term and index its (sid, pid) occurrences.

    Classification is cached per term for the whole build, so a term ends up
    under exactly one answer type no matter how many sentences contain it.
    """
    if summaries.sentence_count == 0:
        raise EmptySummaryStore("cannot index an empty summary store")
    if gazetteer is None:
        gazetteer = Gazetteer.default()
    if stoplist is None:
        stoplist = default_stoplist()

    meta = IndexMeta(
        stoplist_digest=stoplist_digest(stoplist),
        gazetteer_digest=gazetteer.digest,
        summaries_digest=summaries.digest,
    )
    index = QCIndex(meta)
    cache: dict[str, AnswerType] = {}
    for pid, sid, text in summaries.sentences():
        for term in preprocess(text, stoplist):
            answer_type = cache.get(term)
            if answer_type is None:
                answer_type = classify_term(term, provider, gazetteer)
                cache[term] = answer_type
            index.add(answer_type, term, Posting(sid=sid, pid=pid))
    return index


def save_index(index: QCIndex, path: str | Path) -> None:
    """Single JSON document: metadata plus per-type term -> [sid, pid] lists."""
    types: dict[str, dict[str, list[list[int]]]] = {}
    for answer_type, term, posting in index.triples():
        types.setdefault(answer_type.value, {}).setdefault(term, []).append(
            [posting.sid, posting.pid]
        )
    # postings come out of triples() sorted by (sid, pid); order by (pid, sid)
    # to match how the index is usually read
    for terms in types.values():
        for pairs in terms.values():
            pairs.sort(key=lambda sp: (sp[1], sp[0]))
    doc = {
        "format": "qaengine-index",
        "version": 1,
        "meta": {
            "stoplist_digest": index.meta.stoplist_digest,
            "gazetteer_digest": index.meta.gazetteer_digest,
            "summaries_digest": index.meta.summaries_digest,
        },
        "types": types,
    }
    Path(path).write_text(
        json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=1) + "\n",
        encoding="utf-8",
    )


def load_index(path: str | Path, stoplist: frozenset[str] | None = None) -> QCIndex:
    """Load an index; verify the stoplist fingerprint when one is supplied."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != "qaengine-index":
        raise FormatError(f"{path}: not an index file")

    try:
        meta = IndexMeta(
            stoplist_digest=doc["meta"]["stoplist_digest"],
            gazetteer_digest=doc["meta"]["gazetteer_digest"],
            summaries_digest=doc["meta"]["summaries_digest"],
        )
        if stoplist is not None and stoplist_digest(stoplist) != meta.stoplist_digest:
            raise StalePreprocessorError(
                f"{path}: index was built with a different stoplist"
            )
        index = QCIndex(meta)
        for type_name, terms in doc["types"].items():
            answer_type = AnswerType.parse(type_name)
            for term, pairs in terms.items():
                for sid, pid in pairs:
                    index.add(answer_type, term, Posting(sid=int(sid), pid=int(pid)))
    except StalePreprocessorError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad index document: {exc}") from exc
    return index
