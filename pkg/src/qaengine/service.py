"""HTTP service exposing ask / feedback / stats over a loaded store.

The index and summary store are read once at startup and shared read-only;
feedback writes are serialized by the store and durably logged before the
response goes out, so a like is visible to the very next ask.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import EmptyQuery, UnsupportedQuestionClass
from .indexer import QCIndex, load_index
from .preprocess import default_stoplist, load_stoplist
from .qclassify import classify_question
from .search_rank import VOTES, FeedbackStore, rank, search
from .summarizer import SummaryStore

__all__ = ["ServiceConfig", "create_app"]


@dataclass(frozen=True)
class ServiceConfig:
    index_path: Path
    summaries_path: Path
    feedback_path: Path
    host: str = "127.0.0.1"
    port: int = 8080
    static_dir: Path | None = None
    stoplist_path: Path | None = None


class AskRequest(BaseModel):
    question: str


class FeedbackRequest(BaseModel):
    pid: int
    sid: int
    vote: str


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def create_app(config: ServiceConfig) -> FastAPI:
    for path in (config.index_path, config.summaries_path):
        if not Path(path).exists():
            raise FileNotFoundError(f"service file missing: {path}")

    stoplist = (
        load_stoplist(config.stoplist_path)
        if config.stoplist_path is not None
        else default_stoplist()
    )
    # refuses indexes built over a different stoplist, keeping query terms
    # and index terms in one stem space
    index: QCIndex = load_index(config.index_path, stoplist=stoplist)
    summaries = SummaryStore.load(config.summaries_path)
    feedback = FeedbackStore(config.feedback_path)

    app = FastAPI(title="qaengine", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return _error(400, "invalid_request", str(exc.errors()))

    @app.get("/v1/health")
    def health():
        return {"status": "ok"}

    @app.post("/v1/ask")
    def ask(body: AskRequest):
        try:
            query = classify_question(body.question, stoplist)
        except UnsupportedQuestionClass as exc:
            return _error(400, "unsupported_question_class", str(exc))
        except EmptyQuery as exc:
            return _error(400, "empty_query", str(exc))
        ranked = rank(search(index, query, summaries), feedback)
        return {
            "question_class": query.question_class.value,
            "answer_types": [a.value for a in query.answer_types],
            "terms": list(query.terms),
            "answers": [
                {
                    "pid": r.hit.pid,
                    "sid": r.hit.sid,
                    "text": r.hit.text,
                    "feedback_score": r.feedback_score,
                    "matched_terms": r.hit.matched_terms,
                    "likes": feedback.counts(r.hit.pid, r.hit.sid)[0],
                    "dislikes": feedback.counts(r.hit.pid, r.hit.sid)[1],
                }
                for r in ranked
            ],
        }

    @app.post("/v1/feedback")
    def post_feedback(body: FeedbackRequest):
        if body.vote not in VOTES:
            return _error(400, "invalid_vote", f"vote must be one of {list(VOTES)}")
        try:
            likes, dislikes = feedback.record(body.pid, body.sid, body.vote)
        except OSError as exc:
            return _error(500, "feedback_log_error", str(exc))
        return {"likes": likes, "dislikes": dislikes}

    @app.get("/v1/stats")
    def stats():
        return {
            "pages": summaries.page_count,
            "sentences": summaries.sentence_count,
            "terms_per_answer_type": {
                answer_type.value: count
                for answer_type, count in index.terms_per_type().items()
            },
        }

    if config.static_dir is not None:
        app.mount("/", StaticFiles(directory=str(config.static_dir), html=True), name="ui")

    return app
