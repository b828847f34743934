"""Answer relevance scoring: ARS = 100 * RF / TF.

RF counts the relevant factors an answer satisfied out of the TF factors
defined for its answer type; judgments come from fixture files or human
annotation, never from the engine itself.  Values are rounded half-up to
two decimals, and per-(class, type) averages are the arithmetic mean of the
row scores.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from .errors import EmptyRecords, FormatError, InvalidCounts
from .indexer import AnswerType
from .qclassify import QuestionClass

__all__ = [
    "FactorChecklist",
    "EvalRecord",
    "ReportRow",
    "AverageRow",
    "ARSReport",
    "person_checklist",
    "ars",
    "evaluate",
    "export_report",
    "load_report",
    "load_records",
]

_CENT = Decimal("0.01")


@dataclass(frozen=True)
class FactorChecklist:
    answer_type: AnswerType
    factors: tuple[str, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a factor checklist needs at least one factor")

    @property
    def total_factors(self) -> int:
        return len(self.factors)


def person_checklist() -> FactorChecklist:
    """The six survey factors a Person answer can satisfy."""
    return FactorChecklist(
        answer_type=AnswerType.PERSON,
        factors=(
            "person's name",
            "education",
            "birth place / native place",
            "when he/she was born/died",
            "his/her contribution",
            "other related information",
        ),
    )


@dataclass(frozen=True)
class EvalRecord:
    question: str
    question_class: QuestionClass
    answer_type: AnswerType
    tf: int
    rf: int


@dataclass(frozen=True)
class ReportRow:
    question: str
    question_class: QuestionClass
    answer_type: AnswerType
    tf: int
    rf: int
    ars: float


@dataclass(frozen=True)
class AverageRow:
    question_class: QuestionClass
    answer_type: AnswerType
    ars: float


@dataclass(frozen=True)
class ARSReport:
    rows: tuple[ReportRow, ...]
    averages: tuple[AverageRow, ...]


def ars(rf: int, tf: int) -> float:
    """100 * rf / tf as a percentage, rounded half-up to two decimals."""
    if tf < 1 or rf < 0 or rf > tf:
        raise InvalidCounts(f"need 0 <= rf <= tf and tf >= 1, got rf={rf}, tf={tf}")
    value = (Decimal(rf) * 100 / Decimal(tf)).quantize(_CENT, rounding=ROUND_HALF_UP)
    return float(value)


def evaluate(records: list[EvalRecord]) -> ARSReport:
    """Score every record and average per (question class, answer type).

    Groups appear in first-occurrence order of the records.
    """
    if not records:
        raise EmptyRecords("no evaluation records")
    rows = []
    groups: dict[tuple[QuestionClass, AnswerType], list[Decimal]] = {}
    for record in records:
        score = ars(record.rf, record.tf)
        rows.append(
            ReportRow(
                question=record.question,
                question_class=record.question_class,
                answer_type=record.answer_type,
                tf=record.tf,
                rf=record.rf,
                ars=score,
            )
        )
        key = (record.question_class, record.answer_type)
        groups.setdefault(key, []).append(Decimal(str(score)))

    averages = tuple(
        AverageRow(
            question_class=qc,
            answer_type=at,
            ars=float((sum(scores) / len(scores)).quantize(_CENT, rounding=ROUND_HALF_UP)),
        )
        for (qc, at), scores in groups.items()
    )
    return ARSReport(rows=tuple(rows), averages=averages)


_ROW_HEADER = ["question", "question_class", "answer_type", "rf", "tf", "ars"]
_AVG_HEADER = ["question_class", "answer_type", "average_ars"]


def export_report(report: ARSReport, path: str | Path) -> None:
    """Two CSV tables: per-question rows, then per-type averages."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_ROW_HEADER)
    for row in report.rows:
        writer.writerow(
            [
                row.question,
                row.question_class.value,
                row.answer_type.value,
                row.rf,
                row.tf,
                f"{row.ars:.2f}",
            ]
        )
    writer.writerow([])
    writer.writerow(_AVG_HEADER)
    for avg in report.averages:
        writer.writerow([avg.question_class.value, avg.answer_type.value, f"{avg.ars:.2f}"])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def load_report(path: str | Path) -> ARSReport:
    text = Path(path).read_text(encoding="utf-8")
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError(f"{path}: empty report") from None
    if header != _ROW_HEADER:
        raise FormatError(f"{path}: unexpected report header {header!r}")

    rows = []
    averages = []
    in_averages = False
    try:
        for record in reader:
            if not record or record == [""]:
                continue
            if record == _AVG_HEADER:
                in_averages = True
                continue
            if in_averages:
                qc, at, value = record
                averages.append(
                    AverageRow(QuestionClass(qc), AnswerType.parse(at), float(value))
                )
            else:
                question, qc, at, rf, tf, value = record
                rows.append(
                    ReportRow(
                        question=question,
                        question_class=QuestionClass(qc),
                        answer_type=AnswerType.parse(at),
                        tf=int(tf),
                        rf=int(rf),
                        ars=float(value),
                    )
                )
    except (ValueError, FormatError) as exc:
        raise FormatError(f"{path}: bad report content: {exc}") from exc
    return ARSReport(rows=tuple(rows), averages=tuple(averages))


def load_records(path: str | Path) -> list[EvalRecord]:
    """One JSON record per line: {question, question_class, answer_type, tf, rf}."""
    records = []
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            records.append(
                EvalRecord(
                    question=rec["question"],
                    question_class=QuestionClass(rec["question_class"].lower()),
                    answer_type=AnswerType.parse(rec["answer_type"]),
                    tf=int(rec["tf"]),
                    rf=int(rec["rf"]),
                )
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"{path}:{lineno}: bad eval record: {exc}") from exc
    return records
