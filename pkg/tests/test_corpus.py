import pytest

from lexispec.corpus import (
    NO_COMMON_HYPERNYM,
    UNRESOLVABLE,
    EmotionLabel,
    PairKind,
    ParallelRecord,
    attach_specificity,
    load_corpus,
    loads_corpus,
)
from lexispec.errors import DuplicateRecordId, MalformedRecord, MissingFile
from lexispec.specificity import SpecificityVerdict
from lexispec.synsets import SenseKey


def line(record_id="x1", kind="metaphor_vs_literal", term1="rip.v.04", s1="One.",
         term2="criticize.v.01", s2="Two.", labels="a1=first", gold="first"):
    return "\t".join([record_id, kind, term1, s1, term2, s2, labels, gold])


def test_sample_corpus_loads(sample_records):
    assert len(sample_records) == 12
    assert {r.kind for r in sample_records} == set(PairKind)


def test_comments_and_blanks_ignored():
    text = "# header\n\n" + line() + "\n"
    assert len(loads_corpus(text)) == 1


def test_empty_file_empty_list():
    assert loads_corpus("") == []


def test_missing_file():
    with pytest.raises(MissingFile):
        load_corpus("data/no_such_corpus.tsv")


def test_duplicate_record_id():
    text = line() + "\n" + line() + "\n"
    with pytest.raises(DuplicateRecordId):
        loads_corpus(text)


def test_wrong_column_count():
    with pytest.raises(MalformedRecord) as excinfo:
        loads_corpus("a\tb\tc\n")
    assert excinfo.value.line_no == 1


def test_bad_kind():
    with pytest.raises(MalformedRecord):
        loads_corpus(line(kind="nonsense_kind"))


def test_bad_sense_key():
    with pytest.raises(MalformedRecord):
        loads_corpus(line(term1="notakey"))


def test_empty_sentence_rejected():
    with pytest.raises(MalformedRecord):
        loads_corpus(line(s1=" "))


def test_bad_label_token():
    with pytest.raises(MalformedRecord):
        loads_corpus(line(labels="a1=loud"))


def test_duplicate_annotator_rejected():
    with pytest.raises(MalformedRecord):
        loads_corpus(line(labels="a1=first;a1=second"))


def test_gold_without_labels_rejected():
    with pytest.raises(MalformedRecord):
        loads_corpus(line(labels="-", gold="first"))


def test_gold_majority_mismatch_rejected():
    with pytest.raises(MalformedRecord):
        loads_corpus(line(labels="a1=second;a2=second", gold="first"))


def test_optional_fields_dash():
    record = loads_corpus(line(labels="-", gold="-"))[0]
    assert record.annotator_labels == {}
    assert record.gold_emotion is None


def test_gold_strict_majority():
    record = loads_corpus(line(labels="a1=first;a2=first;a3=same", gold="-"))[0]
    assert record.gold_emotion is EmotionLabel.FIRST_MORE_EMOTIONAL


def test_three_way_split_unadjudicated():
    record = loads_corpus(line(labels="a1=first;a2=second;a3=same", gold="-"))[0]
    assert record.gold_emotion is None
    assert record.annotator_labels  # labeled but unadjudicated


def test_attach_figure1_pair(sample_records):
    by_id = {r.record_id: r for r in sample_records}
    assert by_id["r01"].verdict is SpecificityVerdict.FIRST_MORE_SPECIFIC
    assert by_id["r01"].specificity_valid


def test_attach_incomparable_marked_invalid(sample_records):
    by_id = {r.record_id: r for r in sample_records}
    record = by_id["r06"]
    assert record.verdict is SpecificityVerdict.INCOMPARABLE
    assert record.invalid_reason == NO_COMMON_HYPERNYM
    assert not record.specificity_valid


def test_attach_unresolvable_marked_invalid(mini_db, mini_graph):
    record = loads_corpus(line(term1="ghost.v.01"))[0]
    attach_specificity([record], mini_db, mini_graph)
    assert record.invalid_reason == UNRESOLVABLE
    assert record.verdict is None
    assert not record.specificity_valid


def test_attach_validity_rule(sample_records):
    for record in sample_records:
        expected = (
            record.verdict is not None
            and record.verdict is not SpecificityVerdict.INCOMPARABLE
            and record.invalid_reason is None
        )
        assert record.specificity_valid == expected


def test_record_without_attach_is_not_valid():
    record = ParallelRecord(
        record_id="x",
        kind=PairKind.METAPHOR_VS_LITERAL,
        term1=SenseKey("rip", "v", 4),
        sentence1="One.",
        term2=SenseKey("criticize", "v", 1),
        sentence2="Two.",
    )
    assert not record.specificity_valid
