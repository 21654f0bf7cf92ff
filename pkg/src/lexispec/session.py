"""Append-only annotation event log and state reconstruction by replay.

A session is one JSON-lines file: an optional header line of type
``session`` followed by ``event`` lines with strictly contiguous sequence
numbers starting at 1.  Replaying the events over the corpus records
reconstructs the exact annotation state; a torn (partial) final line is
dropped with a warning, any other irregularity is a corrupt store.
"""

from __future__ import annotations

import json
import logging
import os
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path

from .corpus import (
    EmotionLabel,
    PairKind,
    ParallelRecord,
    attach_specificity,
    load_corpus,
)
from .errors import MissingFile, StoreCorrupt
from .hierarchy import HypernymGraph
from .synsets import LexicalDatabase, SenseKey

log = logging.getLogger(__name__)


class EventKind(Enum):
    RECORD_CREATED = "record_created"
    SYNSET_CHOSEN = "synset_chosen"
    PARAPHRASE_CREATED = "paraphrase_created"
    EMOTION_LABELED = "emotion_labeled"


@dataclass(frozen=True)
class AnnotationEvent:
    seq: int
    kind: EventKind
    record_id: str
    payload: dict
    idempotency_key: str | None = None

    def to_json(self) -> str:
        doc = {
            "type": "event",
            "seq": self.seq,
            "kind": self.kind.value,
            "recordId": self.record_id,
            "payload": self.payload,
        }
        if self.idempotency_key is not None:
            doc["idempotencyKey"] = self.idempotency_key
        return json.dumps(doc, sort_keys=True, ensure_ascii=False)


@dataclass
class AnnotationSession:
    session_id: str
    created_at: str
    corpus_ref: str
    events: list[AnnotationEvent] = field(default_factory=list)
    torn_tail_dropped: bool = False


def new_session(corpus_ref: str) -> AnnotationSession:
    return AnnotationSession(
        session_id=uuid.uuid4().hex,
        created_at=datetime.now(timezone.utc).isoformat(),
        corpus_ref=corpus_ref,
    )


def _parse_event(doc: dict, path: Path, line_no: int, expected_seq: int) -> AnnotationEvent:
    try:
        seq = doc["seq"]
        kind = EventKind(doc["kind"])
        record_id = doc["recordId"]
        payload = doc["payload"]
    except (KeyError, ValueError) as exc:
        raise StoreCorrupt(f"{path}:{line_no}: bad event structure: {exc}") from exc
    if not isinstance(seq, int) or not isinstance(record_id, str) or not isinstance(payload, dict):
        raise StoreCorrupt(f"{path}:{line_no}: bad event field types")
    if seq != expected_seq:
        raise StoreCorrupt(f"{path}:{line_no}: expected seq {expected_seq}, found {seq}")
    key = doc.get("idempotencyKey")
    if key is not None and not isinstance(key, str):
        raise StoreCorrupt(f"{path}:{line_no}: idempotencyKey must be a string")
    return AnnotationEvent(seq=seq, kind=kind, record_id=record_id, payload=payload, idempotency_key=key)


def replay_session(path) -> AnnotationSession:
    """Parse and validate one session log.

    A final line without trailing newline that fails to parse is treated as
    a torn write: dropped with a warning.  Mid-log corruption and sequence
    gaps raise StoreCorrupt.
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise MissingFile(f"no event log at {path}") from None

    ends_with_newline = data.endswith(b"\n")
    lines = [(i + 1, raw) for i, raw in enumerate(data.split(b"\n")) if raw.strip()]
    session = AnnotationSession(session_id=path.stem, created_at="", corpus_ref="")
    expected_seq = 1
    for position, (line_no, raw) in enumerate(lines):
        is_unterminated_tail = position == len(lines) - 1 and not ends_with_newline
        try:
            doc = json.loads(raw.decode("utf-8"))
            if not isinstance(doc, dict):
                raise ValueError("not a JSON object")
        except (ValueError, UnicodeDecodeError) as exc:
            if is_unterminated_tail:
                log.warning("dropping torn trailing line in %s", path)
                session.torn_tail_dropped = True
                break
            raise StoreCorrupt(f"{path}:{line_no}: unreadable line: {exc}") from exc
        doc_type = doc.get("type")
        if doc_type == "session":
            if session.events or expected_seq != 1:
                raise StoreCorrupt(f"{path}:{line_no}: session header after events")
            session.session_id = doc.get("sessionId", session.session_id)
            session.created_at = doc.get("createdAt", "")
            session.corpus_ref = doc.get("corpusRef", "")
            continue
        if doc_type != "event":
            raise StoreCorrupt(f"{path}:{line_no}: unknown line type {doc_type!r}")
        session.events.append(_parse_event(doc, path, line_no, expected_seq))
        expected_seq += 1
    return session


class EventLog:
    """Single-writer append-only JSONL store for one session."""

    def __init__(self, path, *, fsync_on_append: bool = True):
        self.path = Path(path)
        self.fsync_on_append = fsync_on_append
        self._lock = threading.Lock()

    def write_header(self, session: AnnotationSession) -> None:
        doc = {
            "type": "session",
            "schemaVersion": 1,
            "sessionId": session.session_id,
            "createdAt": session.created_at,
            "corpusRef": session.corpus_ref,
        }
        self._append_line(json.dumps(doc, sort_keys=True, ensure_ascii=False))

    def append(self, event: AnnotationEvent) -> None:
        self._append_line(event.to_json())

    def _append_line(self, line: str) -> None:
        with self._lock:
            with self.path.open("a", encoding="utf-8") as handle:
                handle.write(line + "\n")
                handle.flush()
                if self.fsync_on_append:
                    os.fsync(handle.fileno())


@dataclass
class AnnotationState:
    """Current record state: corpus records plus every applied event."""

    db: LexicalDatabase
    graph: HypernymGraph
    records: dict[str, ParallelRecord]
    seen_keys: set[str] = field(default_factory=set)
    next_seq: int = 1


def derive_paraphrase(
    base: ParallelRecord, mode: str, key: SenseKey, sentence: str, new_id: str
) -> ParallelRecord:
    """The new pair a paraphrase event creates.

    Sister mode pairs the base record's first term with the chosen
    same-level synset; hyponym mode pairs the base record's second (literal)
    term with the chosen more specific synset.
    """
    if mode == "sister":
        return ParallelRecord(
            record_id=new_id,
            kind=PairKind.METAPHOR_VS_SAME_SPECIFICITY_LITERAL,
            term1=base.term1,
            sentence1=base.sentence1,
            term2=key,
            sentence2=sentence,
        )
    if mode == "hyponym":
        return ParallelRecord(
            record_id=new_id,
            kind=PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL,
            term1=base.term2,
            sentence1=base.sentence2,
            term2=key,
            sentence2=sentence,
        )
    raise ValueError(f"unknown paraphrase mode {mode!r}")


def apply_event(state: AnnotationState, event: AnnotationEvent) -> ParallelRecord:
    """Apply one event to the record state; shared by replay and live writes.

    Live callers validate before appending, so failures here indicate a log
    that no longer matches its corpus: StoreCorrupt.
    """
    if event.idempotency_key:
        state.seen_keys.add(event.idempotency_key)
    payload = event.payload
    try:
        if event.kind is EventKind.RECORD_CREATED:
            if event.record_id in state.records:
                raise StoreCorrupt(f"event {event.seq}: record {event.record_id!r} already exists")
            record = ParallelRecord(
                record_id=event.record_id,
                kind=PairKind(payload["kind"]),
                term1=SenseKey.parse(payload["term1"]),
                sentence1=payload["sentence1"],
                term2=SenseKey.parse(payload["term2"]),
                sentence2=payload["sentence2"],
            )
            attach_specificity([record], state.db, state.graph)
            state.records[record.record_id] = record
            return record

        record = state.records.get(event.record_id)
        if record is None:
            raise StoreCorrupt(f"event {event.seq} references unknown record {event.record_id!r}")

        if event.kind is EventKind.SYNSET_CHOSEN:
            key = SenseKey.parse(payload["key"])
            slot = payload["slot"]
            if slot == "first":
                record.term1 = key
            elif slot == "second":
                record.term2 = key
            else:
                raise StoreCorrupt(f"event {event.seq}: bad slot {slot!r}")
            attach_specificity([record], state.db, state.graph)
            return record

        if event.kind is EventKind.PARAPHRASE_CREATED:
            new_id = payload["newRecordId"]
            if new_id in state.records:
                raise StoreCorrupt(f"event {event.seq}: record {new_id!r} already exists")
            new_record = derive_paraphrase(
                record, payload["mode"], SenseKey.parse(payload["key"]), payload["sentence"], new_id
            )
            attach_specificity([new_record], state.db, state.graph)
            state.records[new_id] = new_record
            return new_record

        if event.kind is EventKind.EMOTION_LABELED:
            record.annotator_labels[payload["annotator"]] = EmotionLabel(payload["label"])
            return record
    except StoreCorrupt:
        raise
    except Exception as exc:
        raise StoreCorrupt(f"event {event.seq}: cannot apply: {exc}") from exc
    raise StoreCorrupt(f"event {event.seq}: unhandled kind {event.kind}")


def build_state(
    db: LexicalDatabase,
    graph: HypernymGraph,
    corpus_path,
    log_paths=(),
) -> AnnotationState:
    """Corpus records with every session log replayed on top, in order.

    ``next_seq`` continues the last replayed log, which is what the service
    needs when it appends to a single session file.
    """
    records: dict[str, ParallelRecord] = {}
    for record in load_corpus(corpus_path):
        records[record.record_id] = record
    attach_specificity(records.values(), db, graph)
    state = AnnotationState(db=db, graph=graph, records=records)
    for log_path in log_paths:
        session = replay_session(log_path)
        for event in session.events:
            apply_event(state, event)
        state.next_seq = session.events[-1].seq + 1 if session.events else 1
    return state


def store_session_files(store_dir) -> list[Path]:
    return sorted(Path(store_dir).glob("*.jsonl"))
