"""Document fetching, markup stripping and text-corpus maintenance.

Sources are explicit file paths or http(s) URLs; there is no crawling.
The corpus persists as one UTF-8 file per document plus a tab-separated
manifest, and is treated as immutable once learning starts.
"""

from __future__ import annotations

import html.parser
import re
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .nlp import tokenize

DEFAULT_MAX_CHARS = 90_000

_BLOCK_TAGS = frozenset({
    "p", "div", "br", "li", "ul", "ol", "dl", "dt", "dd", "h1", "h2", "h3",
    "h4", "h5", "h6", "table", "tr", "td", "th", "section", "article",
    "header", "footer", "title", "blockquote", "pre", "hr", "nav", "aside",
    "form", "figure", "figcaption", "main",
})
_SKIP_TAGS = frozenset({"script", "style", "noscript", "template"})


class IngestError(Exception):
    """Raised when an ingest operation cannot fulfil its contract."""


class DuplicateDocumentError(IngestError):
    pass


class AllSourcesFailedError(IngestError):
    pass


@dataclass(frozen=True)
class RawDocument:
    source_id: str
    data: bytes
    media_hint: str  # "html" or "plain"


@dataclass(frozen=True)
class CorpusDocument:
    doc_id: str
    text: str
    char_count: int
    token_count: int
    source_id: str = ""


@dataclass(frozen=True)
class Corpus:
    documents: tuple[CorpusDocument, ...] = ()

    @property
    def total_chars(self) -> int:
        return sum(d.char_count for d in self.documents)

    @property
    def total_tokens(self) -> int:
        return sum(d.token_count for d in self.documents)

    def doc_ids(self) -> list[str]:
        return [d.doc_id for d in self.documents]


@dataclass(frozen=True)
class FetchResult:
    documents: tuple[RawDocument, ...]
    errors: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class BudgetReport:
    within_budget: bool
    total_chars: int
    max_chars: int


def _is_url(source: str) -> bool:
    return source.startswith("http://") or source.startswith("https://")


def _guess_media(source: str, content_type: str = "") -> str:
    if "html" in content_type:
        return "html"
    lowered = source.lower().split("?")[0]
    if lowered.endswith((".html", ".htm")):
        return "html"
    return "plain"


def fetch_documents(sources: list[str], timeout: float = 10.0) -> FetchResult:
    """Fetch each source in order; per-source failures are recorded, not raised.

    Raises AllSourcesFailedError only when every given source failed.
    """
    documents: list[RawDocument] = []
    errors: list[tuple[str, str]] = []
    for source in sources:
        try:
            if _is_url(source):
                with urllib.request.urlopen(source, timeout=timeout) as response:
                    data = response.read()
                    content_type = response.headers.get("Content-Type", "")
                media = _guess_media(source, content_type)
            else:
                data = Path(source).read_bytes()
                media = _guess_media(source)
            documents.append(RawDocument(source_id=source, data=data, media_hint=media))
        except (OSError, urllib.error.URLError, ValueError) as exc:
            errors.append((source, str(exc)))
    if sources and not documents:
        raise AllSourcesFailedError(
            "all sources failed: " + "; ".join(f"{s}: {m}" for s, m in errors)
        )
    return FetchResult(documents=tuple(documents), errors=tuple(errors))


class _TextExtractor(html.parser.HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.pieces: list[str] = []
        self._skip_depth = 0

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_TAGS:
            self._skip_depth += 1
        elif tag in _BLOCK_TAGS:
            self.pieces.append("\n")

    def handle_endtag(self, tag):
        if tag in _SKIP_TAGS:
            self._skip_depth = max(0, self._skip_depth - 1)
        elif tag in _BLOCK_TAGS:
            self.pieces.append("\n")

    def handle_data(self, data):
        if not self._skip_depth:
            self.pieces.append(data)


def _normalize_whitespace(text: str) -> str:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    lines = [re.sub(r"[ \t\f\v]+", " ", line).strip() for line in text.split("\n")]
    out: list[str] = []
    for line in lines:
        if line:
            out.append(line)
        elif out and out[-1]:
            out.append("")
    while out and not out[-1]:
        out.pop()
    if not out:
        return ""
    return "\n".join(out) + "\n"


def strip_markup(doc: RawDocument) -> str:
    """Decode and normalize a raw document to plain text.

    html: scripts/styles dropped, tags removed, entities decoded, block
    tags turned into line boundaries.  plain: lossy UTF-8 decode.  Both
    paths collapse whitespace and end non-empty output with one newline.
    """
    text = doc.data.decode("utf-8", errors="replace")
    if doc.media_hint == "html":
        extractor = _TextExtractor()
        extractor.feed(text)
        extractor.close()
        text = "".join(extractor.pieces)
    return _normalize_whitespace(text)


def add_document(corpus: Corpus, text: str, doc_id: str, source_id: str = "") -> Corpus:
    if doc_id in corpus.doc_ids():
        raise DuplicateDocumentError(f"doc_id {doc_id!r} already present")
    document = CorpusDocument(
        doc_id=doc_id,
        text=text,
        char_count=len(text),
        token_count=len(tokenize(text)),
        source_id=source_id,
    )
    return Corpus(documents=corpus.documents + (document,))


def corpus_budget_check(corpus: Corpus, max_chars: int = DEFAULT_MAX_CHARS) -> BudgetReport:
    if max_chars <= 0:
        raise ValueError("max_chars must be positive")
    total = corpus.total_chars
    return BudgetReport(within_budget=total <= max_chars, total_chars=total, max_chars=max_chars)


def derive_doc_id(source: str, taken: set[str]) -> str:
    """A filesystem-safe unique id derived from the source name."""
    if _is_url(source):
        tail = source.rstrip("/").rsplit("/", 1)[-1] or "page"
        tail = tail.split("?")[0] or "page"
    else:
        tail = Path(source).name
    stem = tail.rsplit(".", 1)[0] if "." in tail else tail
    stem = re.sub(r"[^A-Za-z0-9._-]+", "-", stem).strip("-.") or "doc"
    candidate = stem
    counter = 2
    while candidate in taken:
        candidate = f"{stem}-{counter}"
        counter += 1
    taken.add(candidate)
    return candidate


def save_corpus(corpus: Corpus, directory) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    rows = []
    for doc in corpus.documents:
        (directory / f"{doc.doc_id}.txt").write_text(doc.text, encoding="utf-8")
        rows.append(f"{doc.doc_id}\t{doc.source_id}\t{doc.char_count}\t{doc.token_count}")
    (directory / "manifest.tsv").write_text("\n".join(rows) + ("\n" if rows else ""), encoding="utf-8")


def load_corpus(directory) -> Corpus:
    directory = Path(directory)
    manifest = directory / "manifest.tsv"
    if not manifest.exists():
        raise IngestError(f"no manifest.tsv in {directory}")
    corpus = Corpus()
    for lineno, line in enumerate(manifest.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise IngestError(f"{manifest}:{lineno}: expected 4 tab-separated fields")
        doc_id, source_id = parts[0], parts[1]
        text = (directory / f"{doc_id}.txt").read_text(encoding="utf-8")
        corpus = add_document(corpus, text, doc_id, source_id)
    return corpus


def read_source_list(path) -> list[str]:
    """One path-or-URL per line; blank lines and # comments ignored."""
    sources = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            sources.append(line)
    return sources
