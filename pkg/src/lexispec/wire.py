"""JSON payload builders shared by the CLI and the HTTP service.

Keeping these in one place guarantees the two surfaces answer identically
for the same database: the service's /specificity body is exactly the CLI's
``compare --format json`` output.
"""

from __future__ import annotations

from .corpus import ParallelRecord
from .hierarchy import CommonHypernym, HypernymGraph, paths_to_roots
from .specificity import SpecificityEvidence, SpecificityVerdict, compare_specificity
from .synsets import LexicalDatabase, Synset, display_key, resolve_sense_key

SCHEMA_VERSION = 1


def synset_payload(db: LexicalDatabase, synset: Synset) -> dict:
    return {
        "key": display_key(db, synset.id),
        "id": str(synset.id),
        "pos": synset.id.pos,
        "lemmas": list(synset.lemmas),
        "gloss": synset.gloss,
        "examples": list(synset.examples),
        "hypernyms": [display_key(db, t) for t in sorted(synset.hypernym_ids())],
        "hyponyms": [display_key(db, t) for t in sorted(synset.hyponym_ids())],
    }


def candidate_payload(db: LexicalDatabase, sids) -> list[dict]:
    return [synset_payload(db, db.synsets[sid]) for sid in sorted(sids)]


def _common_hypernym_payload(db: LexicalDatabase, entry: CommonHypernym) -> dict:
    return {
        "ancestor": display_key(db, entry.ancestor),
        "hopsFirst": entry.hops_first,
        "hopsSecond": entry.hops_second,
    }


def evidence_payload(
    db: LexicalDatabase, verdict: SpecificityVerdict, evidence: SpecificityEvidence
) -> dict:
    doc: dict = {"verdict": verdict.value, "case": evidence.case.value}
    if evidence.ancestor_chain is not None:
        doc["chain"] = [display_key(db, sid) for sid in evidence.ancestor_chain]
    if evidence.lch is not None:
        doc["lch"] = [_common_hypernym_payload(db, entry) for entry in evidence.lch]
    if evidence.chosen is not None:
        doc["chosen"] = _common_hypernym_payload(db, evidence.chosen)
    return doc


def specificity_payload(db: LexicalDatabase, graph: HypernymGraph, key_a: str, key_b: str) -> dict:
    a = resolve_sense_key(db, key_a)
    b = resolve_sense_key(db, key_b)
    verdict, evidence = compare_specificity(graph, a, b)
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "a": display_key(db, a),
        "b": display_key(db, b),
    }
    doc.update(evidence_payload(db, verdict, evidence))
    return doc


def paths_payload(db: LexicalDatabase, graph: HypernymGraph, key: str) -> dict:
    sid = resolve_sense_key(db, key)
    return {
        "schemaVersion": SCHEMA_VERSION,
        "key": display_key(db, sid),
        "paths": [[display_key(db, node) for node in path] for path in paths_to_roots(graph, sid)],
    }


def record_payload(db: LexicalDatabase, record: ParallelRecord) -> dict:
    gold = record.gold_emotion
    specificity = None
    if record.verdict is not None and record.evidence is not None:
        specificity = evidence_payload(db, record.verdict, record.evidence)
    return {
        "recordId": record.record_id,
        "kind": record.kind.value,
        "term1": str(record.term1),
        "sentence1": record.sentence1,
        "term2": str(record.term2),
        "sentence2": record.sentence2,
        "annotatorLabels": {ann: label.value for ann, label in sorted(record.annotator_labels.items())},
        "goldEmotion": gold.value if gold is not None else None,
        "valid": record.specificity_valid,
        "invalidReason": record.invalid_reason,
        "specificity": specificity,
    }
