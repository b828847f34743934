"""Question classification: class word detection and query generation.

The first word of the question names its class (Who/What/Where/When/Which/
Why/How); the fixed class -> answer-type table supplies the expected answer
types, and the rest of the question is preprocessed into the query terms.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import EmptyQuery, UnsupportedQuestionClass
from .indexer import AnswerType
from .preprocess import preprocess

__all__ = ["QuestionClass", "Query", "detect_class", "map_answer_types", "classify_question"]


class QuestionClass(Enum):
    WHO = "who"
    WHAT = "what"
    WHERE = "where"
    WHEN = "when"
    WHICH = "which"
    WHY = "why"
    HOW = "how"


# class -> expected answer types, in the table's printed order
_ANSWER_TYPE_MAP: dict[QuestionClass, tuple[AnswerType, ...]] = {
    QuestionClass.WHO: (AnswerType.PERSON, AnswerType.ORGANIZATION),
    QuestionClass.WHERE: (AnswerType.LOCATION,),
    QuestionClass.WHAT: (
        AnswerType.MONEY,
        AnswerType.NUMBER,
        AnswerType.DEFINITION,
        AnswerType.PROCEDURE,
        AnswerType.ABBREVIATION,
        AnswerType.ORGANIZATION,
        AnswerType.PERSON,
        AnswerType.YEAR,
        AnswerType.MONTH,
        AnswerType.DAY,
        AnswerType.TIME,
        AnswerType.LOCATION,
    ),
    QuestionClass.WHEN: (AnswerType.TIME, AnswerType.YEAR, AnswerType.DAY, AnswerType.MONTH),
    QuestionClass.WHICH: (
        AnswerType.PERSON,
        AnswerType.LOCATION,
        AnswerType.MONTH,
        AnswerType.TIME,
        AnswerType.YEAR,
        AnswerType.DAY,
    ),
    QuestionClass.WHY: (AnswerType.REASON,),
    QuestionClass.HOW: (AnswerType.PROCEDURE,),
}

_STRIP_RE = re.compile(r"^\W+|\W+$")


@dataclass(frozen=True)
class Query:
    question_class: QuestionClass
    answer_types: tuple[AnswerType, ...]
    terms: tuple[str, ...]


def detect_class(question: str) -> QuestionClass:
    """Class of the question from its first word, case-insensitive."""
    words = question.split()
    if not words:
        raise UnsupportedQuestionClass("empty question")
    first = _STRIP_RE.sub("", words[0]).lower()
    try:
        return QuestionClass(first)
    except ValueError:
        raise UnsupportedQuestionClass(
            f"question must start with one of who/what/where/when/which/why/how, got {words[0]!r}"
        ) from None


def map_answer_types(question_class: QuestionClass) -> tuple[AnswerType, ...]:
    return _ANSWER_TYPE_MAP[question_class]


def classify_question(question: str, stoplist: frozenset[str] | None = None) -> Query:
    """Split a question into its class, expected answer types and query terms."""
    question_class = detect_class(question)
    parts = question.split(maxsplit=1)
    remainder = parts[1] if len(parts) > 1 else ""
    terms = preprocess(remainder, stoplist)
    if not terms:
        raise EmptyQuery(f"no query terms left in {question!r}")
    return Query(
        question_class=question_class,
        answer_types=map_answer_types(question_class),
        terms=tuple(terms),
    )
