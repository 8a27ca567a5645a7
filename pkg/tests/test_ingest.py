import socket
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest
from hypothesis import given, strategies as st

from ontoforge.ingest import (
    AllSourcesFailedError,
    Corpus,
    DuplicateDocumentError,
    RawDocument,
    add_document,
    corpus_budget_check,
    derive_doc_id,
    fetch_documents,
    load_corpus,
    read_source_list,
    save_corpus,
    strip_markup,
)


def html_doc(markup: str) -> RawDocument:
    return RawDocument(source_id="test", data=markup.encode(), media_hint="html")


def plain_doc(text: str) -> RawDocument:
    return RawDocument(source_id="test", data=text.encode(), media_hint="plain")


class TestStripMarkup:
    def test_tag_removal_with_block_newline(self):
        assert strip_markup(html_doc("<p>Premium rises.</p>")) == "Premium rises.\n"

    def test_entity_decoding(self):
        assert strip_markup(html_doc("a &amp; b")) == "a & b\n"

    def test_script_elision(self):
        assert strip_markup(html_doc("<script>x=1</script>text")) == "text\n"

    def test_style_elision(self):
        assert strip_markup(html_doc("<style>p{}</style>keep")) == "keep\n"

    def test_plain_passthrough(self):
        assert strip_markup(plain_doc("hello")) == "hello\n"

    def test_invalid_utf8_replaced(self):
        doc = RawDocument(source_id="x", data=b"ok \xff\xfe", media_hint="plain")
        assert "ok" in strip_markup(doc)

    def test_empty(self):
        assert strip_markup(plain_doc("")) == ""

    @given(st.text(max_size=300))
    def test_idempotent_on_own_output(self, raw):
        stripped = strip_markup(html_doc(raw))
        again = strip_markup(RawDocument(source_id="x", data=stripped.encode(), media_hint="plain"))
        assert again == stripped

    def test_html_output_restrips_unchanged_without_entity_brackets(self):
        out = strip_markup(html_doc("<div>alpha <b>beta</b></div><p>gamma</p>"))
        assert strip_markup(html_doc(out)) == out


class TestCorpus:
    def test_add_counts_tokens(self):
        corpus = add_document(Corpus(), "one two three", "d1")
        assert corpus.total_tokens == 3
        assert corpus.total_chars == len("one two three")

    def test_duplicate_rejected(self):
        corpus = add_document(Corpus(), "x", "d1")
        with pytest.raises(DuplicateDocumentError):
            add_document(corpus, "y", "d1")

    def test_ninety_thousand_chars(self):
        corpus = Corpus()
        text = "x" * 15_000
        for i in range(6):
            corpus = add_document(corpus, text, f"d{i}")
        assert corpus.total_chars == 90_000
        assert corpus_budget_check(corpus, 90_000).within_budget

    def test_budget_boundary(self):
        corpus = add_document(Corpus(), "x" * 90_001, "d1")
        assert not corpus_budget_check(corpus, 90_000).within_budget

    def test_empty_corpus_within_budget(self):
        assert corpus_budget_check(Corpus(), 90_000).within_budget

    def test_budget_requires_positive_max(self):
        with pytest.raises(ValueError):
            corpus_budget_check(Corpus(), 0)

    @given(st.permutations(["alpha beta", "gamma", "delta epsilon zeta"]))
    def test_totals_order_independent(self, texts):
        corpus = Corpus()
        for i, text in enumerate(texts):
            corpus = add_document(corpus, text, f"d{i}")
        assert corpus.total_tokens == 6
        assert corpus.total_chars == sum(len(t) for t in texts)

    def test_totals_match_recomputation(self):
        corpus = Corpus()
        for i, text in enumerate(["a b", "c d e", ""]):
            corpus = add_document(corpus, text, f"d{i}")
        assert corpus.total_tokens == sum(d.token_count for d in corpus.documents)

    def test_save_load_round_trip(self, tmp_path):
        corpus = add_document(Corpus(), "alpha beta.", "d1", source_id="src1")
        corpus = add_document(corpus, "gamma", "d2", source_id="src2")
        save_corpus(corpus, tmp_path)
        assert (tmp_path / "manifest.tsv").exists()
        loaded = load_corpus(tmp_path)
        assert loaded == corpus


class _StubHandler(BaseHTTPRequestHandler):
    def do_GET(self):
        body = b"<html><body><p>Hello web.</p></body></html>"
        self.send_response(200)
        self.send_header("Content-Type", "text/html")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture()
def stub_server():
    server = HTTPServer(("127.0.0.1", 0), _StubHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}/page.html"
    server.shutdown()
    server.server_close()


def _dead_url() -> str:
    probe = socket.socket()
    probe.bind(("127.0.0.1", 0))
    port = probe.getsockname()[1]
    probe.close()
    return f"http://127.0.0.1:{port}/"


class TestFetch:
    def test_local_file_passthrough(self, tmp_path):
        path = tmp_path / "a.txt"
        path.write_text("hello")
        result = fetch_documents([str(path)])
        assert len(result.documents) == 1
        assert result.documents[0].data == b"hello"
        assert result.errors == ()

    def test_empty_input(self):
        result = fetch_documents([])
        assert result.documents == ()
        assert result.errors == ()

    def test_unreachable_url_plus_readable_file(self, tmp_path):
        path = tmp_path / "b.txt"
        path.write_text("content")
        result = fetch_documents([_dead_url(), str(path)], timeout=2)
        assert len(result.documents) == 1
        assert len(result.errors) == 1
        assert result.documents[0].source_id == str(path)

    def test_http_fetch_marks_html(self, stub_server):
        result = fetch_documents([stub_server], timeout=5)
        assert len(result.documents) == 1
        doc = result.documents[0]
        assert doc.media_hint == "html"
        assert strip_markup(doc) == "Hello web.\n"

    def test_all_failed_raises(self, tmp_path):
        with pytest.raises(AllSourcesFailedError):
            fetch_documents([str(tmp_path / "missing.txt")])

    def test_input_order_preserved(self, tmp_path):
        first = tmp_path / "1.txt"
        second = tmp_path / "2.txt"
        first.write_text("one")
        second.write_text("two")
        result = fetch_documents([str(first), str(second)])
        assert [d.data for d in result.documents] == [b"one", b"two"]


class TestSourceListAndIds:
    def test_comments_and_blanks_skipped(self, tmp_path):
        listing = tmp_path / "sources.txt"
        listing.write_text("# comment\n\nfile1.txt\nhttp://x/y.html\n")
        assert read_source_list(listing) == ["file1.txt", "http://x/y.html"]

    def test_doc_id_collision_gets_suffix(self):
        taken = set()
        assert derive_doc_id("dir/a.txt", taken) == "a"
        assert derive_doc_id("other/a.txt", taken) == "a-2"

    def test_doc_id_from_url(self):
        assert derive_doc_id("http://host/path/page.html?x=1", set()) == "page"
