"""Command-line entry points: crawl, summarize, index, ask, serve, eval.

Each subcommand reads and writes only the files named by its flags.
Exit codes: 0 success, 1 usage or question error, 2 I/O or format error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .corpus import CrawlConfig, UrlFetcher, crawl, load_repository, read_seed_file, save_repository
from .errors import (
    FormatError,
    QAEngineError,
    StalePreprocessorError,
    StoreMismatch,
)
from .evaluation import evaluate, export_report, load_records
from .indexer import DictionaryProvider, Gazetteer, build_index, load_index, save_index
from .preprocess import default_stoplist, load_stoplist
from .qclassify import classify_question
from .search_rank import FeedbackStore, rank, search
from .summarizer import EmptyText, SummaryStore, summarize


class _Parser(argparse.ArgumentParser):
    """argparse parser that exits 1 on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="qaengine", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("crawl", help="breadth-first crawl from a seed file")
    p.add_argument("--seeds", required=True, help="file with one URL per line")
    p.add_argument("--out", required=True, help="page repository output file")
    p.add_argument("--max-pages", type=int, default=100)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--delay-ms", type=int, default=200)
    p.add_argument("--blog-threshold", type=int, default=2)

    p = sub.add_parser("summarize", help="summarize every page of a repository")
    p.add_argument("--pages", required=True, help="page repository file")
    p.add_argument("--out", required=True, help="summary store output file")
    p.add_argument("--ratio", type=float, default=0.5)
    p.add_argument("--stoplist", help="custom stoplist file")

    p = sub.add_parser("index", help="build the answer-type index from summaries")
    p.add_argument("--summaries", required=True)
    p.add_argument("--dict", required=True, dest="dictionary", help="term definition file")
    p.add_argument("--gazetteer", help="custom keyword table (keyword<TAB>answer_type)")
    p.add_argument("--out", required=True)
    p.add_argument("--stoplist", help="custom stoplist file")

    p = sub.add_parser("ask", help="answer a question against a built store")
    p.add_argument("--index", required=True, dest="index_path")
    p.add_argument("--summaries", required=True)
    p.add_argument("--feedback", help="feedback log (optional)")
    p.add_argument("--stoplist", help="custom stoplist file")
    p.add_argument("question")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--index", required=True, dest="index_path")
    p.add_argument("--summaries", required=True)
    p.add_argument("--feedback", required=True)
    p.add_argument("--static", help="directory with web UI assets")
    p.add_argument("--stoplist", help="custom stoplist file (must match the index build)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)

    p = sub.add_parser("eval", help="score evaluation records into a report")
    p.add_argument("--records", required=True)
    p.add_argument("--out", required=True)

    return parser


def _stoplist_from(args):
    return load_stoplist(args.stoplist) if args.stoplist else default_stoplist()


def _cmd_crawl(args) -> int:
    seeds = read_seed_file(args.seeds)
    config = CrawlConfig(
        seeds=tuple(seeds),
        max_pages=args.max_pages,
        max_depth=args.max_depth,
        per_host_delay_ms=args.delay_ms,
        blog_threshold=args.blog_threshold,
    )
    repo = crawl(config, UrlFetcher())
    save_repository(repo, args.out)
    print(f"crawled {len(repo)} pages -> {args.out}")
    return 0


def _cmd_summarize(args) -> int:
    repo = load_repository(args.pages)
    stoplist = _stoplist_from(args)
    summaries = []
    skipped = 0
    for page in repo:
        try:
            summaries.append(
                summarize(page.text, args.ratio, stoplist=stoplist, pid=page.pid)
            )
        except EmptyText:
            skipped += 1
    store = SummaryStore.from_summaries(summaries)
    store.save(args.out)
    if skipped:
        print(f"skipped {skipped} pages with no sentences", file=sys.stderr)
    print(f"summarized {len(summaries)} pages, {store.sentence_count} sentences -> {args.out}")
    return 0


def _cmd_index(args) -> int:
    summaries = SummaryStore.load(args.summaries)
    provider = DictionaryProvider.from_file(args.dictionary)
    gazetteer = Gazetteer.load(args.gazetteer) if args.gazetteer else Gazetteer.default()
    index = build_index(summaries, provider, gazetteer, _stoplist_from(args))
    save_index(index, args.out)
    print(f"indexed {len(index)} postings over {len(index.terms())} terms -> {args.out}")
    return 0


def _cmd_ask(args) -> int:
    stoplist = _stoplist_from(args)
    index = load_index(args.index_path, stoplist=stoplist)
    summaries = SummaryStore.load(args.summaries)
    feedback = FeedbackStore(args.feedback)
    query = classify_question(args.question, stoplist)
    print(f"class: {query.question_class.value}")
    print(f"answer types: {', '.join(a.value for a in query.answer_types)}")
    print(f"terms: {', '.join(query.terms)}")
    ranked = rank(search(index, query, summaries), feedback)
    if not ranked:
        print("no answers")
        return 0
    for r in ranked:
        print(
            f"{r.rank}. [score {r.feedback_score}, matched {r.hit.matched_terms}] "
            f"(p{r.hit.pid}, s{r.hit.sid}) {r.hit.text}"
        )
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    config = ServiceConfig(
        index_path=Path(args.index_path),
        summaries_path=Path(args.summaries),
        feedback_path=Path(args.feedback),
        host=args.host,
        port=int(os.environ.get("QA_PORT", args.port)),
        static_dir=Path(args.static) if args.static else None,
        stoplist_path=Path(args.stoplist) if args.stoplist else None,
    )
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def _cmd_eval(args) -> int:
    records = load_records(args.records)
    report = evaluate(records)
    export_report(report, args.out)
    print(f"scored {len(report.rows)} questions, {len(report.averages)} averages -> {args.out}")
    return 0


_COMMANDS = {
    "crawl": _cmd_crawl,
    "summarize": _cmd_summarize,
    "index": _cmd_index,
    "ask": _cmd_ask,
    "serve": _cmd_serve,
    "eval": _cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (FormatError, StalePreprocessorError, StoreMismatch, OSError) as exc:
        print(f"qaengine: {exc}", file=sys.stderr)
        return 2
    except QAEngineError as exc:
        print(f"qaengine: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
