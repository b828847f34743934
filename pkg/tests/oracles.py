"""Independent brute-force reimplementations used to cross-check the engine.

These deliberately avoid the production code paths they verify: scoring,
selection, search and ranking are all recomputed here with plain loops over
plain dicts.  They share only the tokenizer/stemmer/stoplist primitives,
which is the point — both sides must live in the same stem space.
"""
import math

from qaengine.preprocess import default_stoplist, stem, tokenize
from qaengine.summarizer import split_sentences


def brute_force_summary_selection(text, ratio=0.5, stoplist=None):
    """Recompute the frequency-scored selection; returns sentence texts in order."""
    if stoplist is None:
        stoplist = default_stoplist()
    sentences = split_sentences(text)

    # term frequencies across the whole text
    freq = {}
    per_sentence = []
    for s in sentences:
        stems = []
        for tok in tokenize(s):
            if tok in stoplist:
                continue
            st = stem(tok)
            stems.append(st)
            freq[st] = freq.get(st, 0) + 1
    # second pass so freq is complete before scoring
    for s in sentences:
        stems = [stem(tok) for tok in tokenize(s) if tok not in stoplist]
        per_sentence.append(stems)
    max_freq = max(freq.values()) if freq else 1

    scored = []
    for pos, stems in enumerate(per_sentence):
        score = 0.0
        for st in stems:
            score += freq[st] / max_freq
        scored.append((score, pos))

    budget = math.ceil(ratio * len(text.split()))
    remaining = sorted(scored, key=lambda t: (-t[0], t[1]))
    chosen = []
    used = 0
    for score, pos in remaining:
        n_words = len(sentences[pos].split())
        if not chosen:
            chosen.append(pos)
            used = n_words
        elif used + n_words <= budget:
            chosen.append(pos)
            used += n_words
    return [sentences[pos] for pos in sorted(chosen)]


def brute_force_top_sentence(text, stoplist=None):
    """Highest scoring sentence (earliest on ties) by direct recomputation."""
    if stoplist is None:
        stoplist = default_stoplist()
    sentences = split_sentences(text)
    freq = {}
    for s in sentences:
        for tok in tokenize(s):
            if tok not in stoplist:
                st = stem(tok)
                freq[st] = freq.get(st, 0) + 1
    max_freq = max(freq.values()) if freq else 1
    best_pos, best_score = 0, -1.0
    for pos, s in enumerate(sentences):
        score = sum(
            freq[stem(tok)] / max_freq for tok in tokenize(s) if tok not in stoplist
        )
        if score > best_score:
            best_pos, best_score = pos, score
    return sentences[best_pos]


def brute_force_search(index_triples, query_terms, summaries):
    """Scan every (answer_type, term, posting) triple; keep postings of query terms.

    index_triples: iterable of (answer_type, term, (sid, pid)).
    Returns {(pid, sid): set(matched terms)}.
    """
    matches = {}
    wanted = set(query_terms)
    for _atype, term, (sid, pid) in index_triples:
        if term in wanted:
            matches.setdefault((pid, sid), set()).add(term)
    return matches


def tuple_sort_rank(hits, feedback_scores):
    """Order hits by the documented key tuple, computed independently.

    hits: list of (pid, sid, matched_terms); feedback_scores: {(pid, sid): int}.
    Returns the hits in rank order.
    """
    keyed = [
        (-feedback_scores.get((pid, sid), 0), -matched, pid, sid)
        for pid, sid, matched in hits
    ]
    order = sorted(range(len(hits)), key=lambda i: keyed[i])
    return [hits[i] for i in order]
