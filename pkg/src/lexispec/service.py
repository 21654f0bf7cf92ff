"""HTTP/JSON annotation service.

The lexical database and hypernym graph are loaded once and shared
read-only across request handlers.  Session mutations are funneled through
a single writer: each POST validates, appends its event to the write-ahead
log, applies it in memory, and only then acknowledges.  Readers take the
same lock briefly so they always see a consistent snapshot no older than
the last acknowledged write.
"""

from __future__ import annotations

import errno
import json
import logging
import re
import threading
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, unquote, urlparse

from . import wire
from .corpus import EmotionLabel, PairKind
from .errors import (
    AddressInUse,
    BadRequest,
    DuplicateEvent,
    DuplicateRecordId,
    InvalidSenseKey,
    LexispecError,
    MalformedRecord,
    MissingFile,
    RecordNotFound,
    SenseOutOfRange,
    StoreCorrupt,
    UnknownLemma,
    UnknownSynset,
)
from .hierarchy import HypernymGraph, direct_hyponyms, sister_terms
from .session import (
    AnnotationEvent,
    EventKind,
    EventLog,
    apply_event,
    build_state,
    new_session,
)
from .stats import compute_stats, render_report
from .synsets import LexicalDatabase, SenseKey, lookup_synsets, resolve_sense_key

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

_STATUS_BY_CODE = {
    MissingFile.code: 404,
    UnknownLemma.code: 404,
    UnknownSynset.code: 404,
    SenseOutOfRange.code: 404,
    RecordNotFound.code: 404,
    InvalidSenseKey.code: 400,
    MalformedRecord.code: 400,
    BadRequest.code: 400,
    DuplicateRecordId.code: 409,
    DuplicateEvent.code: 409,
    StoreCorrupt.code: 500,
}


@dataclass
class ServiceConfig:
    db: LexicalDatabase
    graph: HypernymGraph
    corpus_path: str
    store_dir: str
    host: str = "127.0.0.1"
    port: int = 8700
    fsync_on_append: bool = True
    session_file: str = "session.jsonl"


class AnnotationService:
    """Request-level operations over the shared state; thread-safe."""

    def __init__(self, config: ServiceConfig):
        self.db = config.db
        self.graph = config.graph
        self.corpus_path = str(config.corpus_path)
        store = Path(config.store_dir)
        store.mkdir(parents=True, exist_ok=True)
        self.log_path = store / config.session_file
        existing = [self.log_path] if self.log_path.exists() else []
        self.state = build_state(self.db, self.graph, self.corpus_path, existing)
        self.event_log = EventLog(self.log_path, fsync_on_append=config.fsync_on_append)
        if not existing:
            self.event_log.write_header(new_session(self.corpus_path))
        self.mutex = threading.Lock()

    # -- reads ---------------------------------------------------------

    def records_doc(self) -> dict:
        with self.mutex:
            return {
                "schemaVersion": SCHEMA_VERSION,
                "records": [wire.record_payload(self.db, r) for r in self.state.records.values()],
            }

    def record_doc(self, record_id: str) -> dict:
        with self.mutex:
            record = self.state.records.get(record_id)
            if record is None:
                raise RecordNotFound(record_id)
            return {"schemaVersion": SCHEMA_VERSION, "record": wire.record_payload(self.db, record)}

    def report_text(self, fmt: str) -> str:
        with self.mutex:
            report = compute_stats(list(self.state.records.values()), release=self.db.release)
        return render_report(report, fmt)

    # -- mutations -----------------------------------------------------

    def _commit(self, kind: EventKind, record_id: str, payload: dict, idempotency_key) -> dict:
        # caller holds self.mutex and has validated the payload
        event = AnnotationEvent(
            seq=self.state.next_seq,
            kind=kind,
            record_id=record_id,
            payload=payload,
            idempotency_key=idempotency_key,
        )
        self.event_log.append(event)  # durable before acknowledgment
        record = apply_event(self.state, event)
        self.state.next_seq += 1
        return {
            "schemaVersion": SCHEMA_VERSION,
            "seq": event.seq,
            "record": wire.record_payload(self.db, record),
        }

    def _check_idempotency(self, key) -> None:
        if key is not None and key in self.state.seen_keys:
            raise DuplicateEvent(f"idempotency key {key!r} already applied")

    def create_record(self, body: dict) -> dict:
        kind = _field(body, "kind")
        try:
            PairKind(kind)
        except ValueError:
            raise BadRequest(f"unknown pair kind {kind!r}") from None
        term1 = str(SenseKey.parse(_field(body, "term1")))
        term2 = str(SenseKey.parse(_field(body, "term2")))
        sentence1 = _field(body, "sentence1")
        sentence2 = _field(body, "sentence2")
        if not sentence1.strip() or not sentence2.strip():
            raise BadRequest("sentences must be non-empty")
        with self.mutex:
            self._check_idempotency(body.get("idempotencyKey"))
            record_id = body.get("recordId") or f"rec-{self.state.next_seq:04d}"
            if not isinstance(record_id, str) or not record_id.strip():
                raise BadRequest("recordId must be a non-empty string")
            if record_id in self.state.records:
                raise DuplicateRecordId(record_id)
            payload = {
                "kind": kind,
                "term1": term1,
                "sentence1": sentence1,
                "term2": term2,
                "sentence2": sentence2,
            }
            return self._commit(
                EventKind.RECORD_CREATED, record_id, payload, body.get("idempotencyKey")
            )

    def choose_synset(self, record_id: str, body: dict) -> dict:
        slot = _field(body, "slot")
        if slot not in ("first", "second"):
            raise BadRequest("slot must be 'first' or 'second'")
        key = SenseKey.parse(_field(body, "key"))
        resolve_sense_key(self.db, key)  # 404 on unknown sense
        with self.mutex:
            self._check_idempotency(body.get("idempotencyKey"))
            if record_id not in self.state.records:
                raise RecordNotFound(record_id)
            payload = {"slot": slot, "key": str(key)}
            return self._commit(EventKind.SYNSET_CHOSEN, record_id, payload, body.get("idempotencyKey"))

    def create_paraphrase(self, record_id: str, body: dict) -> dict:
        mode = _field(body, "mode")
        if mode not in ("sister", "hyponym"):
            raise BadRequest("mode must be 'sister' or 'hyponym'")
        key = SenseKey.parse(_field(body, "key"))
        sentence = _field(body, "sentence")
        if not sentence.strip():
            raise BadRequest("sentence must be non-empty")
        chosen = resolve_sense_key(self.db, key)
        with self.mutex:
            self._check_idempotency(body.get("idempotencyKey"))
            base = self.state.records.get(record_id)
            if base is None:
                raise RecordNotFound(record_id)
            source_term = base.term1 if mode == "sister" else base.term2
            try:
                source = resolve_sense_key(self.db, source_term)
            except LexispecError:
                raise BadRequest(f"record term {source_term} does not resolve") from None
            candidates = (
                sister_terms(self.graph, source)
                if mode == "sister"
                else direct_hyponyms(self.graph, source)
            )
            if chosen not in candidates:
                raise BadRequest(f"{key} is not a {mode} candidate of {source_term}")
            new_id = body.get("newRecordId") or f"{record_id}-p{self.state.next_seq:04d}"
            if not isinstance(new_id, str) or not new_id.strip():
                raise BadRequest("newRecordId must be a non-empty string")
            if new_id in self.state.records:
                raise DuplicateRecordId(new_id)
            payload = {
                "mode": mode,
                "key": str(key),
                "sentence": sentence,
                "newRecordId": new_id,
            }
            return self._commit(
                EventKind.PARAPHRASE_CREATED, record_id, payload, body.get("idempotencyKey")
            )

    def label_emotion(self, record_id: str, body: dict) -> dict:
        annotator = _field(body, "annotator")
        if not annotator.strip():
            raise BadRequest("annotator must be non-empty")
        label = _field(body, "label")
        try:
            EmotionLabel(label)
        except ValueError:
            raise BadRequest(f"label must be first|second|same, got {label!r}") from None
        with self.mutex:
            self._check_idempotency(body.get("idempotencyKey"))
            if record_id not in self.state.records:
                raise RecordNotFound(record_id)
            payload = {"annotator": annotator, "label": label}
            if isinstance(body.get("presentation"), str):
                payload["presentation"] = body["presentation"]
            return self._commit(EventKind.EMOTION_LABELED, record_id, payload, body.get("idempotencyKey"))


def _field(body: dict, name: str) -> str:
    value = body.get(name)
    if not isinstance(value, str):
        raise BadRequest(f"missing or non-string field {name!r}")
    return value


_ROUTES = [
    ("GET", re.compile(r"^/synsets$"), "synsets"),
    ("GET", re.compile(r"^/synset/(?P<key>[^/]+)$"), "synset"),
    ("GET", re.compile(r"^/specificity$"), "specificity"),
    ("GET", re.compile(r"^/sisters/(?P<key>[^/]+)$"), "sisters"),
    ("GET", re.compile(r"^/hyponyms/(?P<key>[^/]+)$"), "hyponyms"),
    ("GET", re.compile(r"^/paths/(?P<key>[^/]+)$"), "paths"),
    ("GET", re.compile(r"^/records$"), "records"),
    ("GET", re.compile(r"^/records/(?P<record_id>[^/]+)$"), "record"),
    ("GET", re.compile(r"^/report$"), "report"),
    ("POST", re.compile(r"^/records$"), "create_record"),
    ("POST", re.compile(r"^/records/(?P<record_id>[^/]+)/synset$"), "choose_synset"),
    ("POST", re.compile(r"^/records/(?P<record_id>[^/]+)/paraphrase$"), "create_paraphrase"),
    ("POST", re.compile(r"^/records/(?P<record_id>[^/]+)/emotion$"), "label_emotion"),
]


def _make_handler(service: AnnotationService):
    db, graph = service.db, service.graph

    class Handler(BaseHTTPRequestHandler):
        server_version = "lexispec"
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):
            log.debug("%s %s", self.address_string(), fmt % args)

        def _send(self, status: int, body: bytes, content_type: str = "application/json") -> None:
            self.send_response(status)
            self.send_header("Content-Type", f"{content_type}; charset=utf-8")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _send_json(self, status: int, doc: dict) -> None:
            body = (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")
            self._send(status, body)

        def _send_error(self, status: int, code: str, message: str) -> None:
            self._send_json(
                status,
                {"schemaVersion": SCHEMA_VERSION, "error": {"code": code, "message": message}},
            )

        def _read_body(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            if not raw:
                raise BadRequest("request body required")
            try:
                doc = json.loads(raw.decode("utf-8"))
            except (ValueError, UnicodeDecodeError) as exc:
                raise BadRequest(f"body is not valid JSON: {exc}") from None
            if not isinstance(doc, dict):
                raise BadRequest("body must be a JSON object")
            return doc

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Content-Length", "0")
            self.end_headers()

        def do_GET(self):
            self._dispatch("GET")

        def do_POST(self):
            self._dispatch("POST")

        def _dispatch(self, method: str) -> None:
            parsed = urlparse(self.path)
            for route_method, pattern, name in _ROUTES:
                if route_method != method:
                    continue
                match = pattern.match(parsed.path)
                if not match:
                    continue
                params = {k: unquote(v) for k, v in match.groupdict().items()}
                query = {k: v[0] for k, v in parse_qs(parsed.query).items()}
                try:
                    getattr(self, f"_handle_{name}")(params, query)
                except LexispecError as exc:
                    self._send_error(_STATUS_BY_CODE.get(exc.code, 500), exc.code, str(exc))
                except Exception as exc:  # pragma: no cover - defensive
                    log.exception("internal error handling %s %s", method, self.path)
                    self._send_error(500, "internal", str(exc))
                return
            self._send_error(404, "no_such_route", f"{method} {parsed.path}")

        # -- GET handlers ------------------------------------------------

        def _handle_synsets(self, params, query):
            lemma = query.get("lemma")
            pos = query.get("pos")
            if not lemma or not pos:
                raise BadRequest("query parameters 'lemma' and 'pos' are required")
            candidates = lookup_synsets(db, lemma, pos)
            self._send_json(
                200,
                {
                    "schemaVersion": SCHEMA_VERSION,
                    "synsets": [wire.synset_payload(db, s) for s in candidates],
                },
            )

        def _handle_synset(self, params, query):
            sid = resolve_sense_key(db, params["key"])
            self._send_json(
                200,
                {"schemaVersion": SCHEMA_VERSION, "synset": wire.synset_payload(db, db.synsets[sid])},
            )

        def _handle_specificity(self, params, query):
            a, b = query.get("a"), query.get("b")
            if not a or not b:
                raise BadRequest("query parameters 'a' and 'b' are required")
            self._send_json(200, wire.specificity_payload(db, graph, a, b))

        def _handle_sisters(self, params, query):
            sid = resolve_sense_key(db, params["key"])
            self._send_json(
                200,
                {
                    "schemaVersion": SCHEMA_VERSION,
                    "key": wire.display_key(db, sid),
                    "candidates": wire.candidate_payload(db, sister_terms(graph, sid)),
                },
            )

        def _handle_hyponyms(self, params, query):
            sid = resolve_sense_key(db, params["key"])
            self._send_json(
                200,
                {
                    "schemaVersion": SCHEMA_VERSION,
                    "key": wire.display_key(db, sid),
                    "candidates": wire.candidate_payload(db, direct_hyponyms(graph, sid)),
                },
            )

        def _handle_paths(self, params, query):
            self._send_json(200, wire.paths_payload(db, graph, params["key"]))

        def _handle_records(self, params, query):
            self._send_json(200, service.records_doc())

        def _handle_record(self, params, query):
            self._send_json(200, service.record_doc(params["record_id"]))

        def _handle_report(self, params, query):
            fmt = query.get("format", "json")
            if fmt not in ("json", "text"):
                raise BadRequest("format must be 'json' or 'text'")
            rendered = service.report_text(fmt) + "\n"
            content_type = "application/json" if fmt == "json" else "text/plain"
            self._send(200, rendered.encode("utf-8"), content_type)

        # -- POST handlers -----------------------------------------------

        def _handle_create_record(self, params, query):
            self._send_json(201, service.create_record(self._read_body()))

        def _handle_choose_synset(self, params, query):
            self._send_json(200, service.choose_synset(params["record_id"], self._read_body()))

        def _handle_create_paraphrase(self, params, query):
            self._send_json(201, service.create_paraphrase(params["record_id"], self._read_body()))

        def _handle_label_emotion(self, params, query):
            self._send_json(200, service.label_emotion(params["record_id"], self._read_body()))

    return Handler


class ServiceHandle:
    """A running service: address, shutdown, and the underlying state."""

    def __init__(self, server: ThreadingHTTPServer, thread: threading.Thread, service: AnnotationService):
        self._server = server
        self._thread = thread
        self.service = service

    @property
    def host(self) -> str:
        return self._server.server_address[0]

    @property
    def port(self) -> int:
        return self._server.server_address[1]

    @property
    def url(self) -> str:
        return f"http://{self.host}:{self.port}"

    def join(self) -> None:
        self._thread.join()

    def shutdown(self) -> None:
        self._server.shutdown()
        self._thread.join()
        self._server.server_close()


def serve(config: ServiceConfig) -> ServiceHandle:
    """Start the service in a background thread and return its handle."""
    service = AnnotationService(config)
    handler = _make_handler(service)
    try:
        server = ThreadingHTTPServer((config.host, config.port), handler)
    except OSError as exc:
        if exc.errno == errno.EADDRINUSE:
            raise AddressInUse(f"{config.host}:{config.port}") from None
        raise
    server.daemon_threads = True
    thread = threading.Thread(target=server.serve_forever, name="lexispec-http", daemon=True)
    thread.start()
    return ServiceHandle(server, thread, service)
