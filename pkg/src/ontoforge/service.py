"""HTTP/JSON API over the learning pipeline, review, indexing and search.

Single process, in-memory snapshots with file persistence on mutation.
Readers always see a complete snapshot: mutations build the new state
first and swap references last.  Long-running learn/index runs reject
overlapping requests with 409 instead of queueing.
"""

from __future__ import annotations

import json
import mimetypes
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import ontology, pom, rdf, search
from .config import PipelineConfig
from .pipeline import PipelineError, load_wordnet_db, run_index, run_learn


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class AppState:
    """Mutable service state guarded by a writer lock."""

    def __init__(self, config: PipelineConfig):
        config.validate()
        self.config = config
        self.db = load_wordnet_db(config)
        self.pom: pom.Pom | None = None
        self.onto: ontology.Ontology | None = None
        self.index: search.IndexedMetadata | None = None
        self.write_lock = threading.Lock()
        self.busy = threading.Lock()
        self._load_artifacts()

    def _load_artifacts(self) -> None:
        if self.config.pom_path.exists():
            self.pom = pom.load_pom(self.config.pom_path)
        if self.config.ontology_path.exists():
            self.onto = ontology.load_ontology(self.config.ontology_path)
        if self.config.index_path.exists():
            self.index = search.load_index(self.config.index_path)

    # ----- operations ----------------------------------------------------

    def concepts(self, min_relevance: float) -> list[dict]:
        model = self.pom
        if model is None:
            return []
        return [
            {
                "label": e.label,
                "kind": e.kind,
                "relevance": e.relevance,
                "frequency": e.frequency,
                "override": e.override,
            }
            for e in model.sorted_entities()
            if e.relevance >= min_relevance
        ]

    def apply_review(self, rows: list[dict]) -> dict:
        if self.pom is None:
            raise ApiError(400, "no_pom", "nothing learned yet; run /api/learn first")
        with self.write_lock:
            entities = dict(self.pom.entities)
            unknown = []
            updated = 0
            for row in rows:
                label = row.get("label")
                override = row.get("override", None)
                if label not in entities:
                    unknown.append(str(label))
                    continue
                if override not in (None, 0, 1, 0.0, 1.0):
                    raise ApiError(400, "bad_override", f"override for {label!r} must be 0, 1 or null")
                entity = entities[label]
                entities[label] = pom.PomEntity(
                    label=entity.label,
                    kind=entity.kind,
                    relevance=entity.relevance,
                    frequency=entity.frequency,
                    override=None if override is None else float(override),
                )
                updated += 1
            if unknown:
                raise ApiError(400, "unknown_labels", "unknown labels: " + ", ".join(sorted(unknown)))
            new_pom = pom.Pom(entities=entities, corpus_token_count=self.pom.corpus_token_count)
            Path(self.config.out_dir).mkdir(parents=True, exist_ok=True)
            pom.save_pom(new_pom, self.config.pom_path)
            self.pom = new_pom
        return {"updated": updated, "total": len(entities)}

    def learn(self) -> dict:
        if not self.busy.acquire(blocking=False):
            raise ApiError(409, "busy", "a learn or index run is already in progress")
        try:
            overrides = {}
            if self.pom is not None:
                overrides = {
                    label: entity.override
                    for label, entity in self.pom.entities.items()
                    if entity.override is not None
                }
            try:
                result = run_learn(self.config, overrides=overrides, db=self.db)
            except PipelineError as exc:
                raise ApiError(400, "empty_corpus", str(exc)) from exc
            with self.write_lock:
                self.pom = result.pom
                self.onto = result.ontology
            return {
                "concepts": len(result.ontology.concepts),
                "relations": len(result.ontology.relations),
            }
        finally:
            self.busy.release()

    def build_index(self) -> dict:
        if not self.busy.acquire(blocking=False):
            raise ApiError(409, "busy", "a learn or index run is already in progress")
        try:
            if self.onto is None:
                raise ApiError(400, "no_ontology", "nothing learned yet; run /api/learn first")
            idx = run_index(self.config, self.onto, self.db)
            with self.write_lock:
                self.index = idx
            return {
                "documents": len(idx.doc_titles),
                "concepts_with_documents": sum(
                    1 for docs in idx.concept_to_docs.values() if docs
                ),
            }
        finally:
            self.busy.release()

    def search_results(self, terms: list[str], user: str, mode: str) -> list[search.SearchResult]:
        idx = self.index or search.IndexedMetadata({}, {}, {})
        onto = self.onto or ontology.Ontology(concepts={})
        profile = search.load_profile(self.config.profiles_dir, user)
        try:
            expanded = search.expand_query(
                terms, onto, self.db,
                max_distance=self.config.max_distance,
                decay=self.config.decay,
                mode=mode,
            )
        except search.EmptyExpansionError:
            return []
        except search.SearchError as exc:
            raise ApiError(400, "bad_query", str(exc)) from exc
        return search.execute_query(expanded, idx, profile, self.config.literal_weight)

    def select(self, user: str, doc_id: str) -> dict:
        if self.index is None:
            raise ApiError(404, "no_index", "repository not indexed")
        with self.write_lock:
            profile = search.load_profile(self.config.profiles_dir, user)
            try:
                profile = search.record_selection(
                    profile, doc_id, self.index, self.config.increment
                )
            except search.UnknownDocumentError as exc:
                raise ApiError(404, "unknown_document", str(exc)) from exc
            search.save_profile(profile, self.config.profiles_dir)
        concepts = sorted(self.index.doc_to_concepts.get(doc_id, ()))
        return {"user": user, "ratings": {c: profile.rating(c) for c in concepts}}

    def compare(self, reference: str) -> dict:
        from . import evaluation

        path = Path(reference)
        if not path.exists():
            raise ApiError(400, "bad_reference", f"no such reference file: {reference}")
        try:
            if path.suffix.lower() in (".ttl", ".nt", ".turtle"):
                manual = ontology.extract_classes(rdf.parse_rdf(path))
            else:
                manual = ontology.load_class_list(path)
        except rdf.RdfSyntaxError as exc:
            raise ApiError(400, "bad_reference", str(exc)) from exc
        onto = self.onto or ontology.Ontology(concepts={})
        return evaluation.compare(onto, manual, self.db, case_name=path.stem).to_dict()

    def ontology_json(self) -> dict:
        onto = self.onto or ontology.Ontology(concepts={})
        return {
            "concepts": [
                {
                    "label": label,
                    "relevance": info.relevance,
                    "aliases": list(info.aliases),
                }
                for label, info in sorted(onto.concepts.items())
            ],
            "relations": [
                {
                    "label": r.label,
                    "domain": r.domain,
                    "range": r.range,
                    "confidence": r.confidence,
                }
                for r in onto.relations
            ],
            "subclass_edges": [list(edge) for edge in onto.subclass_edges],
        }

    def ontology_turtle(self) -> str:
        onto = self.onto or ontology.Ontology(concepts={})
        return ontology.serialize_turtle(onto, self.config.base_iri)


class _Handler(BaseHTTPRequestHandler):
    server_version = "ontoforge"
    protocol_version = "HTTP/1.1"

    @property
    def state(self) -> AppState:
        return self.server.state  # type: ignore[attr-defined]

    def log_message(self, format, *args):  # quiet by default
        pass

    # ----- plumbing -------------------------------------------------------

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        if self.state.config.cors:
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, payload, status: int = 200) -> None:
        if isinstance(payload, str):
            body = payload.encode("utf-8")
        else:
            body = (json.dumps(payload, indent=2) + "\n").encode("utf-8")
        self._send(status, body, "application/json; charset=utf-8")

    def _send_error_json(self, error: ApiError) -> None:
        self._send_json({"code": error.code, "message": error.message}, status=error.status)

    def _read_json(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise ApiError(400, "empty_body", "request body must be JSON")
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ApiError(400, "bad_json", f"invalid JSON body: {exc}") from exc

    # ----- routing --------------------------------------------------------

    def do_OPTIONS(self):
        self._send(204, b"", "text/plain")

    def do_GET(self):
        try:
            url = urlparse(self.path)
            params = parse_qs(url.query)
            if url.path == "/api/concepts":
                try:
                    minimum = float(params.get("min_relevance", ["0"])[0])
                except ValueError as exc:
                    raise ApiError(400, "bad_param", "min_relevance must be a number") from exc
                self._send_json(self.state.concepts(minimum))
            elif url.path == "/api/ontology":
                accept = self.headers.get("Accept", "")
                if "text/turtle" in accept:
                    self._send(200, self.state.ontology_turtle().encode("utf-8"), "text/turtle; charset=utf-8")
                else:
                    self._send_json(self.state.ontology_json())
            elif url.path == "/api/search":
                q = params.get("q", [""])[0]
                if not q.strip():
                    raise ApiError(400, "bad_param", "q parameter is required")
                user = params.get("user", ["anonymous"])[0]
                mode = params.get("mode", ["expand"])[0]
                if mode not in search.QUERY_MODES:
                    raise ApiError(400, "bad_param", f"mode must be one of {', '.join(search.QUERY_MODES)}")
                results = self.state.search_results(q.split(), user, mode)
                self._send_json(search.results_json(results))
            elif url.path == "/api/compare":
                reference = params.get("reference", [""])[0]
                if not reference:
                    raise ApiError(400, "bad_param", "reference parameter is required")
                self._send_json(self.state.compare(reference))
            elif url.path.startswith("/api/"):
                raise ApiError(404, "not_found", f"no such endpoint: {url.path}")
            else:
                self._serve_static(url.path)
        except ApiError as error:
            self._send_error_json(error)
        except Exception as exc:  # contract: 5xx bodies are JSON too
            self._send_error_json(ApiError(500, "internal", str(exc)))

    def do_POST(self):
        try:
            url = urlparse(self.path)
            if url.path == "/api/learn":
                self._send_json(self.state.learn())
            elif url.path == "/api/index":
                self._send_json(self.state.build_index())
            elif url.path == "/api/concepts/review":
                rows = self._read_json()
                if not isinstance(rows, list):
                    raise ApiError(400, "bad_body", "expected a JSON array of {label, override}")
                self._send_json(self.state.apply_review(rows))
            elif url.path == "/api/select":
                body = self._read_json()
                user = body.get("user")
                doc_id = body.get("doc_id")
                if not user or not doc_id:
                    raise ApiError(400, "bad_body", "user and doc_id are required")
                self._send_json(self.state.select(user, doc_id))
            else:
                raise ApiError(404, "not_found", f"no such endpoint: {url.path}")
        except ApiError as error:
            self._send_error_json(error)
        except Exception as exc:
            self._send_error_json(ApiError(500, "internal", str(exc)))

    # ----- static assets ----------------------------------------------------

    def _serve_static(self, path: str) -> None:
        assets = self.state.config.assets_dir
        if not assets:
            raise ApiError(404, "not_found", "no static assets configured")
        root = Path(assets).resolve()
        if not root.is_dir():
            raise ApiError(404, "not_found", "asset directory missing")
        relative = path.lstrip("/") or "index.html"
        target = (root / relative).resolve()
        if root not in target.parents and target != root:
            raise ApiError(404, "not_found", "no such file")
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            raise ApiError(404, "not_found", f"no such file: {path}")
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), content_type)


class _Server(ThreadingHTTPServer):
    daemon_threads = True

    def handle_error(self, request, client_address):
        import sys

        exc = sys.exc_info()[1]
        if isinstance(exc, (ConnectionResetError, BrokenPipeError)):
            return  # client went away; not an error worth a traceback
        super().handle_error(request, client_address)


def create_server(config: PipelineConfig) -> ThreadingHTTPServer:
    host, _, port = config.listen.rpartition(":")
    server = _Server((host or "127.0.0.1", int(port)), _Handler)
    server.state = AppState(config)  # type: ignore[attr-defined]
    return server


def serve(config: PipelineConfig) -> None:
    server = create_server(config)
    host, port = server.server_address[:2]
    print(f"ontoforge service listening on http://{host}:{port}/")
    try:
        server.serve_forever()
    finally:
        server.server_close()
