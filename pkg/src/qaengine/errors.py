"""Exception types shared across the engine."""


class QAEngineError(Exception):
    """Base class for engine errors."""


class EmptySeeds(QAEngineError):
    """Crawl was started with no seed URLs."""


class FetchError(QAEngineError):
    """A page could not be downloaded."""


class FormatError(QAEngineError):
    """A persisted file is corrupt or has an unexpected layout."""


class EmptyText(QAEngineError):
    """Summarization input contains no sentences."""


class EmptySummaryStore(QAEngineError):
    """Index build was given a summary store with no sentences."""


class StalePreprocessorError(QAEngineError):
    """A loaded index was built with a different stoplist than the current one."""


class UnsupportedQuestionClass(QAEngineError):
    """The question does not open with one of the seven supported class words."""


class EmptyQuery(QAEngineError):
    """Nothing is left of the question once the class word and stopwords are removed."""


class StoreMismatch(QAEngineError):
    """Index and summary store do not come from the same build."""


class InvalidCounts(QAEngineError):
    """Relevance factor counts violate 0 <= rf <= tf, tf >= 1."""


class EmptyRecords(QAEngineError):
    """Evaluation was given no records."""
