import json
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lexispec.corpus import PairKind, attach_specificity, loads_corpus
from lexispec.hierarchy import build_graph
from lexispec.stats import (
    compute_stats,
    pct,
    render_report,
    report_from_dict,
    report_to_dict,
    signed_delta,
)
from lexispec.synthetic import (
    case_split_corpus,
    crosstab_corpus,
    emotion_corpus,
    template_database,
)


def analyzed(corpus_text):
    db = template_database()
    graph = build_graph(db)
    records = loads_corpus(corpus_text)
    return attach_specificity(records, db, graph)


def test_pct_round_half_up():
    assert pct(1, 8) == "12.5"
    assert pct(1, 16) == "6.3"  # 6.25 rounds half up
    assert pct(98, 114) == "86.0"
    assert pct(0, 0) == "0.0"
    assert pct(3, 3) == "100.0"


def test_signed_delta():
    assert signed_delta("40.0", "83.6") == "-43.6"
    assert signed_delta("21.9", "9.9") == "+12.0"


def test_empty_corpus_no_division_by_zero():
    report = compute_stats([])
    text = render_report(report, "text")
    assert "records: 0 total" in text
    assert "0 (0.0%)" in text


def test_sample_corpus_counts(sample_records, mini_db):
    report = compute_stats(sample_records, release=mini_db.release)
    assert report.n_total == 12
    assert report.n_tested == 6
    assert report.n_valid == 5
    assert report.n_invalid == 1
    assert report.invalid_reasons["no_common_hypernym"] == 1
    assert report.specificity_distribution == {
        "first_more_specific": 3,
        "second_more_specific": 1,
        "same_level": 1,
    }
    assert report.case_split == {"direct_relation": 3, "common_hypernym": 2}
    assert report.invalid_records == [["r06", "no_common_hypernym"]]


def test_cross_tab_sums_to_valid(sample_records):
    report = compute_stats(sample_records)
    total = sum(sum(cells.values()) for cells in report.cross_tab.values())
    assert total == report.n_valid


def test_percentages_recompute_from_counts(sample_records):
    report = compute_stats(sample_records)
    doc = report_to_dict(report)
    for column, count in report.specificity_distribution.items():
        assert doc["presentation"]["specificityDistributionPct"][column] == pct(count, report.n_valid)


def test_permutation_invariance(sample_records):
    report = compute_stats(sample_records)
    rng = random.Random(7)
    for _ in range(5):
        shuffled = list(sample_records)
        rng.shuffle(shuffled)
        assert compute_stats(shuffled) == report


def test_duplication_doubles_counts(sample_records):
    import copy

    doubled = sample_records + [copy.deepcopy(r) for r in sample_records]
    for copy_record in doubled[len(sample_records):]:
        copy_record.record_id += "-dup"
    single = compute_stats(sample_records)
    double = compute_stats(doubled)
    assert double.n_total == 2 * single.n_total
    assert double.n_valid == 2 * single.n_valid
    for column, count in single.specificity_distribution.items():
        assert double.specificity_distribution[column] == 2 * count
    for row, cells in single.cross_tab.items():
        for column, count in cells.items():
            assert double.cross_tab[row][column] == 2 * count


def test_json_round_trip(sample_records, mini_db):
    report = compute_stats(sample_records, release=mini_db.release)
    parsed = json.loads(render_report(report, "json"))
    assert parsed["schemaVersion"] == 1
    assert report_from_dict(parsed) == report


def test_crosstab_corpus_realizes_cells():
    corpus = crosstab_corpus(
        {
            ("first", "first_more_specific"): 4,
            ("first", "same_level"): 2,
            ("second", "second_more_specific"): 3,
        }
    )
    report = compute_stats(analyzed(corpus))
    assert report.n_valid == 9
    assert report.cross_tab["more_emotional"]["first_more_specific"] == 4
    assert report.cross_tab["more_emotional"]["same_level"] == 2
    assert report.cross_tab["less_or_same_emotional"]["second_more_specific"] == 3


def test_case_split_corpus_realizes_cases():
    report = compute_stats(analyzed(case_split_corpus(direct=7, common=3)))
    assert report.case_split == {"direct_relation": 7, "common_hypernym": 3}


def test_emotion_corpus_realizes_distributions():
    corpus = emotion_corpus(
        {
            PairKind.METAPHOR_VS_LITERAL: (5, 2, 3),
            PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL: (1, 4, 5),
        }
    )
    report = compute_stats(analyzed(corpus))
    mvl = report.emotion_by_kind[PairKind.METAPHOR_VS_LITERAL.value]
    assert mvl["counts"] == {"first": 5, "second": 2, "same": 3}
    literal = report.emotion_by_kind[PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL.value]
    assert literal["counts"] == {"first": 1, "second": 4, "same": 5}


def test_single_annotator_alpha_insufficient():
    report = compute_stats(analyzed(case_split_corpus(direct=3, common=1)))
    entry = report.emotion_by_kind[PairKind.METAPHOR_VS_LITERAL.value]["alpha"]
    assert entry == {"status": "insufficient_data", "value": None}


def test_unadjudicated_excluded_from_distribution():
    rows = [
        "u1\tmetaphor_vs_literal\tchildact.v.01\tS one.\tparentact.v.01\tS two.\ta1=first;a2=second;a3=same\t-",
        "u2\tmetaphor_vs_literal\tchildact.v.01\tS one.\tparentact.v.01\tS two.\ta1=first;a2=first;a3=same\t-",
    ]
    report = compute_stats(analyzed("\n".join(rows) + "\n"))
    entry = report.emotion_by_kind[PairKind.METAPHOR_VS_LITERAL.value]
    assert entry["n"] == 1
    assert entry["unadjudicated"] == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_report_json_round_trip_random_corpora(seed):
    rng = random.Random(seed)
    corpus = crosstab_corpus(
        {
            ("first", "first_more_specific"): rng.randint(0, 9),
            ("first", "second_more_specific"): rng.randint(0, 9),
            ("second", "same_level"): rng.randint(0, 9),
        }
    )
    report = compute_stats(analyzed(corpus))
    assert report_from_dict(json.loads(render_report(report, "json"))) == report
