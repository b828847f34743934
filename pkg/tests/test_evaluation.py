import random
from decimal import ROUND_HALF_UP, Decimal

import pytest

from qaengine.errors import EmptyRecords, FormatError, InvalidCounts
from qaengine.evaluation import (
    ARSReport,
    AverageRow,
    EvalRecord,
    ars,
    evaluate,
    export_report,
    load_records,
    load_report,
    person_checklist,
)
from qaengine.indexer import AnswerType
from qaengine.qclassify import QuestionClass

# ten survey questions with their satisfied-factor counts (out of six)
PERSON_SURVEY = [
    ("Who is the first woman Prime Minister of India?", 5),
    ("Who is the founder of Infosys?", 4),
    ("Who is Mother Teresa?", 6),
    ("Who is Barak Obama?", 5),
    ("Who is Michael Jackson?", 3),
    ("Who is the inventor of Telephone?", 4),
    ("Who is the second man on the Moon?", 4),
    ("Who discovered America?", 5),
    ('Who is known as the "Missile Man"?', 5),
    ("Who is the first mughal emperor of India?", 6),
]


def person_records():
    return [
        EvalRecord(
            question=q,
            question_class=QuestionClass.WHO,
            answer_type=AnswerType.PERSON,
            tf=6,
            rf=rf,
        )
        for q, rf in PERSON_SURVEY
    ]


class TestArs:
    @pytest.mark.parametrize(
        "rf,tf,expected",
        [(5, 6, 83.33), (4, 6, 66.67), (6, 6, 100.00), (3, 6, 50.00), (0, 6, 0.00)],
    )
    def test_values(self, rf, tf, expected):
        assert ars(rf, tf) == pytest.approx(expected, abs=0.001)

    def test_half_up_rounding(self):
        # 100 * 1/16 = 6.25 exactly; 100 * 1/3 = 33.333...; 100 * 5/8 = 62.5
        assert ars(1, 16) == 6.25
        assert ars(1, 3) == 33.33
        assert ars(2, 3) == 66.67

    def test_invalid_counts(self):
        for rf, tf in [(7, 6), (-1, 6), (0, 0), (1, -2)]:
            with pytest.raises(InvalidCounts):
                ars(rf, tf)

    def test_bounds_and_monotonicity(self):
        rng = random.Random(12)
        for _ in range(300):
            tf = rng.randint(1, 20)
            values = [ars(rf, tf) for rf in range(tf + 1)]
            assert all(0.0 <= v <= 100.0 for v in values)
            assert values == sorted(values)
            assert values[-1] == 100.0


class TestEvaluate:
    def test_person_survey_average(self):
        report = evaluate(person_records())
        assert len(report.rows) == 10
        assert [row.ars for row in report.rows] == [
            83.33, 66.67, 100.00, 83.33, 50.00, 66.67, 66.67, 83.33, 83.33, 100.00,
        ]
        assert report.averages == (
            AverageRow(QuestionClass.WHO, AnswerType.PERSON, 78.33),
        )

    def test_single_perfect_record(self):
        report = evaluate(
            [EvalRecord("Who is X?", QuestionClass.WHO, AnswerType.PERSON, 4, 4)]
        )
        assert report.averages[0].ars == 100.00

    def test_empty_records(self):
        with pytest.raises(EmptyRecords):
            evaluate([])

    def test_groups_in_first_appearance_order(self):
        records = [
            EvalRecord("Why a?", QuestionClass.WHY, AnswerType.REASON, 2, 1),
            EvalRecord("Who b?", QuestionClass.WHO, AnswerType.PERSON, 2, 2),
            EvalRecord("Why c?", QuestionClass.WHY, AnswerType.REASON, 2, 2),
        ]
        report = evaluate(records)
        assert [(a.question_class, a.answer_type) for a in report.averages] == [
            (QuestionClass.WHY, AnswerType.REASON),
            (QuestionClass.WHO, AnswerType.PERSON),
        ]
        assert report.averages[0].ars == 75.00

    def test_randomized_against_recomputed_means(self):
        rng = random.Random(55)
        for _ in range(100):
            records = []
            for _ in range(rng.randint(1, 25)):
                tf = rng.randint(1, 9)
                records.append(
                    EvalRecord(
                        question=f"q{rng.randint(0, 999)}",
                        question_class=rng.choice(list(QuestionClass)),
                        answer_type=rng.choice(list(AnswerType)),
                        tf=tf,
                        rf=rng.randint(0, tf),
                    )
                )
            report = evaluate(records)
            # independent recomputation with plain loops over Decimal
            sums: dict = {}
            for record in records:
                value = (Decimal(record.rf) * 100 / Decimal(record.tf)).quantize(
                    Decimal("0.01"), rounding=ROUND_HALF_UP
                )
                key = (record.question_class, record.answer_type)
                sums.setdefault(key, []).append(value)
            for avg in report.averages:
                values = sums[(avg.question_class, avg.answer_type)]
                expected = sum(values) / len(values)
                assert abs(Decimal(str(avg.ars)) - expected) <= Decimal("0.005")


class TestReportFiles:
    def test_round_trip(self, tmp_path):
        report = evaluate(person_records())
        path = tmp_path / "report.csv"
        export_report(report, path)
        assert load_report(path) == report

    def test_re_export_byte_identical(self, tmp_path):
        report = evaluate(person_records())
        p1, p2 = tmp_path / "one.csv", tmp_path / "two.csv"
        export_report(report, p1)
        export_report(load_report(p1), p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_empty_report_headers_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        export_report(ARSReport(rows=(), averages=()), path)
        lines = path.read_text("utf-8").splitlines()
        assert lines[0].startswith("question,")
        assert lines[-1].startswith("question_class,")
        assert load_report(path) == ARSReport(rows=(), averages=())

    def test_commas_in_questions_survive(self, tmp_path):
        records = [
            EvalRecord(
                'Who said "less, but better", and when?',
                QuestionClass.WHO,
                AnswerType.PERSON,
                6,
                3,
            )
        ]
        path = tmp_path / "r.csv"
        export_report(evaluate(records), path)
        assert load_report(path).rows[0].question == records[0].question

    def test_bad_report_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("nope\n", "utf-8")
        with pytest.raises(FormatError):
            load_report(path)


def test_load_records(tmp_path):
    path = tmp_path / "records.jsonl"
    path.write_text(
        '{"question": "Who is X?", "question_class": "who", "answer_type": "person", "tf": 6, "rf": 5}\n'
        '{"question": "How is Y done?", "question_class": "how", "answer_type": "process", "tf": 4, "rf": 2}\n',
        "utf-8",
    )
    records = load_records(path)
    assert records[0].rf == 5
    assert records[1].answer_type == AnswerType.PROCEDURE  # process alias
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"question": "x"}\n', "utf-8")
    with pytest.raises(FormatError):
        load_records(bad)


def test_person_checklist_has_six_factors():
    checklist = person_checklist()
    assert checklist.total_factors == 6
    assert checklist.answer_type == AnswerType.PERSON
