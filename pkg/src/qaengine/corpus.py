"""Breadth-first crawling with blog-page detection and a page repository.

A page counts as a blog when at least ``blog_threshold`` of four features
hold: "blog" appears in the URL, a feed link tag is present, extractable
dates run newest-first, and most hyperlinks point back at the page's own
host.
"""
from __future__ import annotations

import json
import re
import time
import urllib.request
from collections import deque
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from enum import Enum
from html.parser import HTMLParser
from pathlib import Path
from urllib.parse import urljoin, urlsplit, urlunsplit

from .errors import EmptySeeds, FetchError, FormatError

__all__ = [
    "PageKind",
    "PageRecord",
    "BlogEvidence",
    "CrawlConfig",
    "PageRepository",
    "detect_blog",
    "extract_links",
    "extract_text",
    "crawl",
    "save_repository",
    "load_repository",
    "read_seed_file",
    "canonicalize_url",
    "UrlFetcher",
]


class PageKind(Enum):
    WEB = "web"
    BLOG = "blog"


@dataclass(frozen=True)
class BlogEvidence:
    has_blog_in_url: bool
    has_rss_link: bool
    posts_date_descending: bool
    majority_self_links: bool

    @property
    def score(self) -> int:
        return sum(
            (
                self.has_blog_in_url,
                self.has_rss_link,
                self.posts_date_descending,
                self.majority_self_links,
            )
        )


@dataclass(frozen=True)
class PageRecord:
    pid: int
    url: str
    kind: PageKind
    fetched_at: datetime
    text: str
    links: tuple[str, ...]


@dataclass(frozen=True)
class CrawlConfig:
    seeds: tuple[str, ...]
    max_pages: int = 100
    max_depth: int = 3
    per_host_delay_ms: int = 0
    blog_threshold: int = 2

    def __post_init__(self):
        if not 1 <= self.blog_threshold <= 4:
            raise ValueError(f"blog_threshold must be in 1..4, got {self.blog_threshold}")
        if self.max_pages < 0 or self.max_depth < 0 or self.per_host_delay_ms < 0:
            raise ValueError("max_pages, max_depth and per_host_delay_ms must be >= 0")


class PageRepository:
    """Immutable, ordered collection of crawled pages."""

    def __init__(self, pages: list[PageRecord]):
        self._pages = tuple(pages)
        self._by_pid = {p.pid: p for p in self._pages}

    def __iter__(self):
        return iter(self._pages)

    def __len__(self):
        return len(self._pages)

    def __eq__(self, other):
        return isinstance(other, PageRepository) and self._pages == other._pages

    def by_pid(self, pid: int) -> PageRecord:
        return self._by_pid[pid]

    @property
    def pages(self) -> tuple[PageRecord, ...]:
        return self._pages


class _PageScan(HTMLParser):
    """Single pass over the markup: anchors, feed links, visible text."""

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.hrefs: list[str] = []
        self.has_feed_link = False
        self._suppress = 0
        self._chunks: list[str] = []

    def handle_starttag(self, tag, attrs):
        attrs = dict(attrs)
        if tag == "a":
            href = attrs.get("href")
            if href is not None:
                self.hrefs.append(href)
        elif tag == "link":
            link_type = (attrs.get("type") or "").lower()
            if "rss" in link_type or "atom" in link_type:
                self.has_feed_link = True
        elif tag in ("script", "style"):
            self._suppress += 1

    def handle_endtag(self, tag):
        if tag in ("script", "style") and self._suppress:
            self._suppress -= 1

    def handle_data(self, data):
        if not self._suppress and data:
            self._chunks.append(data)

    @property
    def text(self) -> str:
        return " ".join(" ".join(self._chunks).split())


def _scan(html: str) -> _PageScan:
    parser = _PageScan()
    parser.feed(html)
    return parser


def extract_text(html: str) -> str:
    """Visible text with tags removed, script/style dropped, whitespace collapsed."""
    return _scan(html).text


def extract_links(html: str, base_url: str) -> list[str]:
    """Absolute http(s) link targets in document order, duplicates retained.

    Relative hrefs resolve against ``base_url``; fragment-only hrefs and
    non-http(s) schemes are dropped, and fragments are stripped from the
    resolved URLs.
    """
    links = []
    for href in _scan(html).hrefs:
        href = href.strip()
        if not href or href.startswith("#"):
            continue
        try:
            resolved = urljoin(base_url, href)
            parts = urlsplit(resolved)
        except ValueError:
            continue
        if parts.scheme not in ("http", "https"):
            continue
        links.append(urlunsplit((parts.scheme, parts.netloc, parts.path, parts.query, "")))
    return links


_MONTHS = {
    "january": 1, "february": 2, "march": 3, "april": 4, "may": 5, "june": 6,
    "july": 7, "august": 8, "september": 9, "october": 10, "november": 11,
    "december": 12,
}

_DATE_RE = re.compile(
    r"\b(\d{4})-(\d{2})-(\d{2})\b"
    r"|\b(january|february|march|april|may|june|july|august|september|october"
    r"|november|december)\s+(\d{1,2}),\s*(\d{4})\b",
    re.IGNORECASE,
)


def _extract_dates(text: str) -> list[date]:
    """ISO and "Month DD, YYYY" dates in document order; invalid ones skipped."""
    found = []
    for m in _DATE_RE.finditer(text):
        try:
            if m.group(1):
                found.append(date(int(m.group(1)), int(m.group(2)), int(m.group(3))))
            else:
                found.append(date(int(m.group(6)), _MONTHS[m.group(4).lower()], int(m.group(5))))
        except ValueError:
            continue
    return found


def detect_blog(html: str, url: str) -> BlogEvidence:
    """Compute the four blog-page features for a page."""
    scan = _scan(html)
    has_blog_in_url = "blog" in url.lower()

    dates = _extract_dates(scan.text)
    descending = len(dates) >= 2 and all(a >= b for a, b in zip(dates, dates[1:]))

    links = extract_links(html, url)
    own_host = urlsplit(url).netloc.lower()
    if links:
        same = sum(1 for link in links if urlsplit(link).netloc.lower() == own_host)
        majority = same / len(links) > 0.5
    else:
        majority = False

    return BlogEvidence(
        has_blog_in_url=has_blog_in_url,
        has_rss_link=scan.has_feed_link,
        posts_date_descending=descending,
        majority_self_links=majority,
    )


def canonicalize_url(url: str) -> str:
    """Lowercase scheme and host, drop the fragment, keep the query."""
    parts = urlsplit(url)
    path = parts.path or "/"
    return urlunsplit((parts.scheme.lower(), parts.netloc.lower(), path, parts.query, ""))


class UrlFetcher:
    """Default fetcher: plain HTTP GET via urllib, returning the decoded body."""

    def __init__(self, timeout: float = 10.0, user_agent: str = "qaengine-crawler/0.1"):
        self.timeout = timeout
        self.user_agent = user_agent

    def __call__(self, url: str) -> str:
        req = urllib.request.Request(url, headers={"User-Agent": self.user_agent})
        try:
            with urllib.request.urlopen(req, timeout=self.timeout) as resp:
                charset = resp.headers.get_content_charset() or "utf-8"
                return resp.read().decode(charset, errors="replace")
        except Exception as exc:  # urllib raises a small zoo of error types
            raise FetchError(f"fetch failed for {url}: {exc}") from exc


def crawl(config: CrawlConfig, fetcher) -> PageRepository:
    """Breadth-first crawl from the seeds, one fetch per canonical URL.

    ``fetcher`` is any callable mapping a URL to its body; raising marks the
    URL failed and the crawl moves on.  Fetches to the same host are spaced
    by ``per_host_delay_ms``.
    """
    if not config.seeds:
        raise EmptySeeds("crawl needs at least one seed URL")

    frontier: deque[tuple[str, int]] = deque()
    seen: set[str] = set()
    for seed in config.seeds:
        canonical = canonicalize_url(seed)
        if canonical not in seen:
            seen.add(canonical)
            frontier.append((canonical, 0))

    last_fetch: dict[str, float] = {}
    delay = config.per_host_delay_ms / 1000.0
    pages: list[PageRecord] = []

    while frontier and len(pages) < config.max_pages:
        url, depth = frontier.popleft()
        host = urlsplit(url).netloc.lower()
        if delay > 0:
            elapsed = time.monotonic() - last_fetch.get(host, -delay)
            if elapsed < delay:
                time.sleep(delay - elapsed)
        last_fetch[host] = time.monotonic()

        try:
            body = fetcher(url)
        except Exception:
            continue

        links = extract_links(body, url)
        evidence = detect_blog(body, url)
        kind = PageKind.BLOG if evidence.score >= config.blog_threshold else PageKind.WEB
        pages.append(
            PageRecord(
                pid=len(pages) + 1,
                url=url,
                kind=kind,
                fetched_at=datetime.now(timezone.utc),
                text=extract_text(body),
                links=tuple(links),
            )
        )

        if depth < config.max_depth:
            for link in links:
                canonical = canonicalize_url(link)
                if canonical not in seen:
                    seen.add(canonical)
                    frontier.append((canonical, depth + 1))

    return PageRepository(pages)


_HEADER = {"format": "qaengine-pages", "version": 1}


def save_repository(repo: PageRepository, path: str | Path) -> None:
    lines = [json.dumps({**_HEADER, "count": len(repo)}, sort_keys=True, separators=(",", ":"))]
    for page in repo:
        lines.append(
            json.dumps(
                {
                    "pid": page.pid,
                    "url": page.url,
                    "kind": page.kind.value,
                    "fetched_at": page.fetched_at.isoformat(),
                    "text": page.text,
                    "links": list(page.links),
                },
                ensure_ascii=False,
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_repository(path: str | Path) -> PageRepository:
    raw = Path(path).read_text(encoding="utf-8")
    lines = raw.splitlines()
    if not lines:
        raise FormatError(f"{path}: empty repository file (missing header)")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: bad header: {exc}") from exc
    if header.get("format") != _HEADER["format"]:
        raise FormatError(f"{path}: not a page repository file")

    pages = []
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            pages.append(
                PageRecord(
                    pid=int(rec["pid"]),
                    url=rec["url"],
                    kind=PageKind(rec["kind"]),
                    fetched_at=datetime.fromisoformat(rec["fetched_at"]),
                    text=rec["text"],
                    links=tuple(rec["links"]),
                )
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"{path}:{lineno}: bad page record: {exc}") from exc
    return PageRepository(pages)


def read_seed_file(path: str | Path) -> list[str]:
    """One URL per line; blank lines and # comments ignored."""
    seeds = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            seeds.append(line)
    return seeds
