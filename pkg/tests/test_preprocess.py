import random

from qaengine.preprocess import (
    default_stoplist,
    load_stoplist,
    preprocess,
    stem,
    stem_tokens,
    stoplist_digest,
    tokenize,
)


class TestTokenize:
    def test_simple_sentence(self):
        assert tokenize("Distributed systems fail.") == ["distributed", "systems", "fail"]

    def test_empty(self):
        assert tokenize("") == []

    def test_question_with_punctuation(self):
        assert tokenize("Who is the First Prime Minister of India?") == [
            "who", "is", "the", "first", "prime", "minister", "of", "india",
        ]

    def test_numbers_kept(self):
        assert tokenize("Room 42, floor 3.") == ["room", "42", "floor", "3"]

    def test_contractions_split_on_apostrophe(self):
        assert tokenize("it's slow") == ["it", "s", "slow"]


class TestPreprocess:
    def test_all_stopwords(self):
        assert preprocess("the the the") == []

    def test_table_style_phrase(self):
        assert preprocess("discovered stem cell") == ["discov", "stem", "cell"]

    def test_question_remainder(self):
        assert preprocess("president of USA elected") == ["presid", "usa", "elect"]

    def test_dedup_keeps_first_occurrence(self):
        assert preprocess("cars car cells cell cars") == ["car", "cell"]

    def test_empty_result_allowed(self):
        assert preprocess("") == []

    def test_custom_stoplist(self):
        assert preprocess("alpha beta gamma", frozenset({"beta"})) == ["alpha", "gamma"]

    def test_stopword_removal_before_stemming(self):
        # "doing" is a stopword on its surface form; its stem never appears
        out = preprocess("doing chores")
        assert "do" not in out and out == ["chore"]


def test_stopwords_contribute_nothing():
    rng = random.Random(7)
    stop = sorted(default_stoplist())
    content = ["engine", "cricket", "voyage", "mountain", "signal", "harbor"]
    for _ in range(200):
        words = [rng.choice(content + stop) for _ in range(rng.randint(0, 15))]
        text = " ".join(words)
        stripped = " ".join(w for w in words if w not in default_stoplist())
        assert preprocess(text) == preprocess(stripped)


def test_stem_tokens_keeps_order_and_duplicates():
    assert stem_tokens("cars AND cars") == ["car", "and", "car"]


def test_default_stoplist_is_lowercase_and_sized():
    stop = default_stoplist()
    assert all(w == w.lower() for w in stop)
    assert 120 <= len(stop) <= 250
    assert {"a", "an", "the", "is", "of", "did"} <= stop


def test_load_stoplist_and_digest(tmp_path):
    p = tmp_path / "stop.txt"
    p.write_text("# comment\nalpha\nBETA\n\n", encoding="utf-8")
    sl = load_stoplist(p)
    assert sl == frozenset({"alpha", "beta"})
    assert stoplist_digest(sl) == stoplist_digest(frozenset({"beta", "alpha"}))
    assert stoplist_digest(sl) != stoplist_digest(default_stoplist())


def test_shared_stem_function():
    # summarizer, indexer and question parsing all import this single stem
    assert stem("cars") == "car"
    assert stem("education") == "educ"
