"""A small built-in sample corpus for trying the engine end to end.

Seven pages of summary sentences and a curated index over them, matching
the examples used throughout the test suite.  ``write_demo_files`` lays the
sample down as regular store files so the CLI and the HTTP service can run
against it immediately.
"""
from __future__ import annotations

import json
from pathlib import Path

from .indexer import AnswerType, Gazetteer, IndexMeta, Posting, QCIndex, save_index
from .preprocess import default_stoplist, stem, stoplist_digest
from .summarizer import SummaryStore

# (pid, sid, sentence)
SAMPLE_SENTENCES = [
    (1, 1, "Programming languages offer many ways to organize data."),
    (1, 2, "Choosing the right structure makes software easier to reason about."),
    (1, 3, "Lists and queues appear in almost every program."),
    (1, 4, "Stacks support undo features in editors."),
    (1, 5, "An ADT hides the representation behind a small set of operations."),
    (2, 1, "Every ADT is described by the operations it supports."),
    (2, 2, "Implementations can change without breaking callers."),
    (2, 3, "Encapsulation keeps invariants safe."),
    (2, 4, "Students meet the ADT idea early in computing courses."),
    (4, 1, "The mail room sorts letters twice a day."),
    (4, 2, "Parcels are weighed before dispatch."),
    (4, 3, "Incoming messages are logged at the front desk."),
    (5, 1, "The firm publishes its results every quarter."),
    (5, 2, "Shareholders vote at the annual meeting."),
    (5, 3, "The board sets long term strategy."),
    (5, 4, "Auditors review the accounts in spring."),
    (5, 5, "Corporate planning follows the budget cycle."),
    (7, 1, "The final match was played on Sunday."),
    (7, 2, "The old series between the two clubs began decades ago."),
    (7, 3, "Rain delayed the second innings."),
    (7, 4, "The touring side visits the USA in December."),
    (7, 5, "The batsman scored a century before lunch."),
    (8, 1, "The museum opened a new wing last year."),
    (8, 2, "Exhibits rotate through the main hall."),
    (8, 3, "The oldest craft on display is a wooden canoe."),
    (8, 4, "One tapestry is more than a century old."),
    (9, 1, "The president takes the oath of office in December."),
    (9, 2, "A televised show follows the ceremony."),
    (9, 3, "Crowds gather along the parade route."),
    (9, 4, "The evening show ends with fireworks."),
]

# curated index rows: (surface term, answer type, [(sid, pid), ...])
SAMPLE_INDEX_ROWS = [
    ("Batsman", AnswerType.PERSON, [(5, 7)]),
    ("President", AnswerType.PERSON, [(1, 9)]),
    ("USA", AnswerType.LOCATION, [(4, 7)]),
    ("Incoming", AnswerType.PROCEDURE, [(3, 4)]),
    ("Series", AnswerType.NUMBER, [(2, 7)]),
    ("Sunday", AnswerType.DAY, [(1, 7)]),
    ("December", AnswerType.MONTH, [(4, 7), (1, 9)]),
    ("Old", AnswerType.TIME, [(2, 7)]),
    ("Century", AnswerType.TIME, [(4, 8)]),
    ("ADT", AnswerType.ABBREVIATION, [(5, 1), (1, 2), (4, 2)]),
    ("Corporate", AnswerType.ORGANIZATION, [(5, 5)]),
    ("Show", AnswerType.DEFINITION, [(2, 9), (4, 9)]),
]

SAMPLE_DICTIONARY = [
    ("batsman", "the name of a player who bats in cricket"),
    ("president", "the name of the elected leader of a republic"),
    ("usa", "a country of north america made up of fifty states"),
    ("continent", "any of the world's main continuous expanses of land"),
    ("incoming", "a procedure of arriving at or entering a place"),
    ("series", "a quantity of related things coming one after another"),
    ("sunday", "the day of the week before monday"),
    ("december", "the twelfth and last month, following november"),
    ("adt", "the full form of this abbreviation is abstract data type"),
    ("corporate", "relating to a large company or group"),
    ("king", "the name given to a male monarch, leader of a kingdom"),
    ("mountain", "a large natural elevation of land rising above the surrounding plain"),
    ("dollar", "the currency unit of several countries"),
    ("mile", "a unit of distance equal to 1760 yards"),
    ("election", "a formal procedure by which a population chooses officials"),
    ("telephone", "a method of transmitting voices over wires"),
    ("teresa", "the name of a nun honored for her charity work"),
    ("infosys", "a company providing information technology services"),
    ("america", "a country occupying much of the north american land mass"),
    ("cricket", "a game played between two sides of eleven players"),
]


def build_sample_store() -> SummaryStore:
    return SummaryStore(SAMPLE_SENTENCES)


def build_sample_index(store: SummaryStore | None = None) -> QCIndex:
    """The curated sample index, with stems produced by the shipped stemmer."""
    if store is None:
        store = build_sample_store()
    meta = IndexMeta(
        stoplist_digest=stoplist_digest(default_stoplist()),
        gazetteer_digest=Gazetteer.default().digest,
        summaries_digest=store.digest,
    )
    index = QCIndex(meta)
    for surface, answer_type, pairs in SAMPLE_INDEX_ROWS:
        term = stem(surface.lower())
        for sid, pid in pairs:
            index.add(answer_type, term, Posting(sid=sid, pid=pid))
    return index


def write_demo_files(directory: str | Path) -> dict[str, Path]:
    """Write summaries, index, dictionary and an empty feedback log.

    Returns the paths keyed by role.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    store = build_sample_store()
    index = build_sample_index(store)

    paths = {
        "summaries": directory / "summaries.jsonl",
        "index": directory / "index.json",
        "dictionary": directory / "dictionary.jsonl",
        "feedback": directory / "feedback.log",
    }
    store.save(paths["summaries"])
    save_index(index, paths["index"])
    with paths["dictionary"].open("w", encoding="utf-8") as fh:
        for term, definition in SAMPLE_DICTIONARY:
            fh.write(json.dumps({"term": term, "definition": definition}) + "\n")
    paths["feedback"].touch()
    return paths
