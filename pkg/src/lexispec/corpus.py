"""Parallel sentence-pair records and their tab-separated corpus file.

One record per line::

    recordId<TAB>kind<TAB>term1<TAB>sentence1<TAB>term2<TAB>sentence2<TAB>annotatorLabels<TAB>goldEmotion

``annotatorLabels`` is ``ann1=first;ann2=same;...`` and optional fields are
``-``.  Lines starting with ``#`` are ignored.  The gold emotion of a record
is always the strict majority of its annotator labels; a stored gold value
is cross-checked against that majority at load time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import (
    DuplicateRecordId,
    InvalidSenseKey,
    MalformedRecord,
    MissingFile,
    SenseOutOfRange,
    UnknownLemma,
    UnknownSynset,
)
from .hierarchy import HypernymGraph
from .specificity import SpecificityEvidence, SpecificityVerdict, compare_specificity
from .synsets import LexicalDatabase, SenseKey, SynsetId, resolve_sense_key


class PairKind(Enum):
    METAPHOR_VS_LITERAL = "metaphor_vs_literal"
    METAPHOR_VS_SAME_SPECIFICITY_LITERAL = "metaphor_vs_same_specificity_literal"
    LITERAL_VS_MORE_SPECIFIC_LITERAL = "literal_vs_more_specific_literal"


class EmotionLabel(Enum):
    FIRST_MORE_EMOTIONAL = "first"
    SECOND_MORE_EMOTIONAL = "second"
    SIMILARLY_EMOTIONAL = "same"


UNRESOLVABLE = "unresolvable"
NO_COMMON_HYPERNYM = "no_common_hypernym"


@dataclass
class ParallelRecord:
    record_id: str
    kind: PairKind
    term1: SenseKey
    sentence1: str
    term2: SenseKey
    sentence2: str
    annotator_labels: dict[str, EmotionLabel] = field(default_factory=dict)
    synset1: SynsetId | None = None
    synset2: SynsetId | None = None
    verdict: SpecificityVerdict | None = None
    evidence: SpecificityEvidence | None = None
    invalid_reason: str | None = None

    @property
    def gold_emotion(self) -> EmotionLabel | None:
        """Strict majority of annotator labels; None when unlabeled or when
        no label holds more than half the votes (unadjudicated)."""
        if not self.annotator_labels:
            return None
        counts = Counter(self.annotator_labels.values())
        label, top = counts.most_common(1)[0]
        if 2 * top > sum(counts.values()):
            return label
        return None

    @property
    def specificity_valid(self) -> bool:
        return (
            self.verdict is not None
            and self.verdict is not SpecificityVerdict.INCOMPARABLE
            and self.invalid_reason is None
        )


def _parse_kind(token: str, line_no: int) -> PairKind:
    try:
        return PairKind(token)
    except ValueError:
        valid = ", ".join(k.value for k in PairKind)
        raise MalformedRecord(line_no, f"unknown pair kind {token!r} (expected one of: {valid})") from None


def _parse_label(token: str, line_no: int) -> EmotionLabel:
    try:
        return EmotionLabel(token)
    except ValueError:
        raise MalformedRecord(line_no, f"unknown emotion label {token!r} (expected first|second|same)") from None


def _parse_annotator_labels(token: str, line_no: int) -> dict[str, EmotionLabel]:
    labels: dict[str, EmotionLabel] = {}
    if token.strip() == "-":
        return labels
    for part in token.split(";"):
        part = part.strip()
        if not part:
            continue
        annotator, sep, value = part.partition("=")
        if not sep or not annotator.strip():
            raise MalformedRecord(line_no, f"bad annotator label entry {part!r} (expected name=label)")
        annotator = annotator.strip()
        if annotator in labels:
            raise MalformedRecord(line_no, f"duplicate annotator {annotator!r}")
        labels[annotator] = _parse_label(value.strip(), line_no)
    return labels


def load_corpus(path) -> list[ParallelRecord]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MissingFile(str(path)) from None
    return loads_corpus(text)


def loads_corpus(text: str) -> list[ParallelRecord]:
    records: list[ParallelRecord] = []
    seen: set[str] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 8:
            raise MalformedRecord(line_no, f"expected 8 tab-separated fields, got {len(cols)}")
        record_id, kind_tok, term1_tok, sentence1, term2_tok, sentence2, labels_tok, gold_tok = cols
        record_id = record_id.strip()
        if not record_id:
            raise MalformedRecord(line_no, "empty record id")
        if record_id in seen:
            raise DuplicateRecordId(f"record id {record_id!r} appears more than once (line {line_no})")
        if not sentence1.strip() or not sentence2.strip():
            raise MalformedRecord(line_no, "sentences must be non-empty")
        try:
            term1 = SenseKey.parse(term1_tok)
            term2 = SenseKey.parse(term2_tok)
        except InvalidSenseKey as exc:
            raise MalformedRecord(line_no, str(exc)) from None
        record = ParallelRecord(
            record_id=record_id,
            kind=_parse_kind(kind_tok.strip(), line_no),
            term1=term1,
            sentence1=sentence1,
            term2=term2,
            sentence2=sentence2,
            annotator_labels=_parse_annotator_labels(labels_tok, line_no),
        )
        if gold_tok.strip() != "-":
            gold = _parse_label(gold_tok.strip(), line_no)
            if not record.annotator_labels:
                raise MalformedRecord(line_no, "gold emotion given but no annotator labels present")
            if record.gold_emotion is not gold:
                raise MalformedRecord(
                    line_no,
                    f"stored gold label {gold.value!r} does not match the annotator majority",
                )
        seen.add(record_id)
        records.append(record)
    return records


def attach_specificity(records, db: LexicalDatabase, graph: HypernymGraph):
    """Resolve each record's sense keys and attach verdict plus evidence.

    Failures never raise: records whose keys do not resolve are flagged
    ``unresolvable``, pairs without a common hypernym ``no_common_hypernym``;
    both are excluded from specificity statistics.
    """
    for record in records:
        record.synset1 = record.synset2 = None
        record.verdict = record.evidence = None
        record.invalid_reason = None
        try:
            record.synset1 = resolve_sense_key(db, record.term1)
            record.synset2 = resolve_sense_key(db, record.term2)
            record.verdict, record.evidence = compare_specificity(graph, record.synset1, record.synset2)
        except (UnknownLemma, SenseOutOfRange, InvalidSenseKey, UnknownSynset):
            record.invalid_reason = UNRESOLVABLE
            continue
        if record.verdict is SpecificityVerdict.INCOMPARABLE:
            record.invalid_reason = NO_COMMON_HYPERNYM
    return records
