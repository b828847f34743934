"""Question answering over an answer-type sentence index.

Pipeline: crawl pages, summarize them, classify summary terms into expected
answer types via dictionary definitions, index (sentence id, page id)
postings per term, then answer wh-questions by mapping the question class
to answer types and ranking matching sentences by user feedback.
"""

__version__ = "0.1.0"
