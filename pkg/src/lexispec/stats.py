"""Corpus-level statistics: specificity distribution, case split, the
specificity-by-emotion cross-tabulation, per-kind emotion distributions
with agreement scores, and text/JSON rendering.

Percentages are printed with one decimal, rounding half up.  Specificity
statistics (distribution, case split, cross-tab) are computed over the
metaphor-vs-literal records only, since those are the pairs the specificity
procedure targets; per-kind emotion distributions cover all three kinds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from .agreement import AlphaInput, krippendorff_alpha
from .corpus import NO_COMMON_HYPERNYM, UNRESOLVABLE, EmotionLabel, PairKind, ParallelRecord
from .errors import InsufficientData, UndefinedAlpha
from .specificity import SpecificityCase

SCHEMA_VERSION = 1

SPECIFICITY_COLUMNS = ("first_more_specific", "second_more_specific", "same_level")
EMOTION_ROWS = ("first", "second", "same")
UNEVALUATED = "unevaluated"

MORE_EMOTIONAL = "more_emotional"
LESS_OR_SAME = "less_or_same_emotional"


def pct(count: int, total: int) -> str:
    """One-decimal percentage, round half up; '0.0' for an empty total."""
    if total == 0:
        return "0.0"
    value = Decimal(count) * 100 / Decimal(total)
    return str(value.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def signed_delta(value: str, baseline: str) -> str:
    """Difference of two rendered percentages, with an explicit sign."""
    return format(Decimal(value) - Decimal(baseline), "+")


@dataclass
class StatsReport:
    release: str = "unknown"
    n_total: int = 0
    n_by_kind: dict[str, int] = field(default_factory=dict)
    n_tested: int = 0
    n_valid: int = 0
    n_invalid: int = 0
    invalid_reasons: dict[str, int] = field(default_factory=dict)
    specificity_distribution: dict[str, int] = field(default_factory=dict)
    case_split: dict[str, int] = field(default_factory=dict)
    cross_tab: dict[str, dict[str, int]] = field(default_factory=dict)
    cross_tab_unmerged: dict[str, dict[str, int]] = field(default_factory=dict)
    conditional_rates: dict[str, list[int]] = field(default_factory=dict)
    emotion_by_kind: dict[str, dict] = field(default_factory=dict)
    invalid_records: list[list[str]] = field(default_factory=list)


def _alpha_entry(records: list[ParallelRecord]) -> dict:
    try:
        value = krippendorff_alpha(AlphaInput.from_records(records))
    except InsufficientData:
        return {"status": "insufficient_data", "value": None}
    except UndefinedAlpha:
        return {"status": "undefined", "value": None}
    return {"status": "ok", "value": value}


def compute_stats(records: list[ParallelRecord], release: str = "unknown") -> StatsReport:
    """Pure function of the record list; permutation-invariant by construction."""
    report = StatsReport(release=release)
    report.n_total = len(records)
    report.n_by_kind = {kind.value: 0 for kind in PairKind}
    for record in records:
        report.n_by_kind[record.kind.value] += 1

    tested = [r for r in records if r.kind is PairKind.METAPHOR_VS_LITERAL]
    valid = [r for r in tested if r.specificity_valid]
    report.n_tested = len(tested)
    report.n_valid = len(valid)
    report.n_invalid = len(tested) - len(valid)
    report.invalid_reasons = {NO_COMMON_HYPERNYM: 0, UNRESOLVABLE: 0, UNEVALUATED: 0}
    for record in tested:
        if record.specificity_valid:
            continue
        reason = record.invalid_reason or UNEVALUATED
        report.invalid_reasons[reason] += 1
        report.invalid_records.append([record.record_id, reason])

    report.specificity_distribution = {column: 0 for column in SPECIFICITY_COLUMNS}
    report.case_split = {
        SpecificityCase.DIRECT_RELATION.value: 0,
        SpecificityCase.COMMON_HYPERNYM.value: 0,
    }
    for record in valid:
        report.specificity_distribution[record.verdict.value] += 1
        report.case_split[record.evidence.case.value] += 1

    report.cross_tab_unmerged = {
        row: {column: 0 for column in SPECIFICITY_COLUMNS} for row in EMOTION_ROWS
    }
    for record in valid:
        gold = record.gold_emotion
        if gold is not None:
            report.cross_tab_unmerged[gold.value][record.verdict.value] += 1
    report.cross_tab = {
        MORE_EMOTIONAL: dict(report.cross_tab_unmerged["first"]),
        LESS_OR_SAME: {
            column: report.cross_tab_unmerged["second"][column] + report.cross_tab_unmerged["same"][column]
            for column in SPECIFICITY_COLUMNS
        },
    }
    cell = report.cross_tab[MORE_EMOTIONAL]["first_more_specific"]
    more_specific_total = sum(report.cross_tab_unmerged[row]["first_more_specific"] for row in EMOTION_ROWS)
    more_emotional_total = sum(report.cross_tab[MORE_EMOTIONAL].values())
    report.conditional_rates = {
        "more_emotional_given_more_specific": [cell, more_specific_total],
        "more_specific_given_more_emotional": [cell, more_emotional_total],
    }

    for kind in PairKind:
        subset = [r for r in records if r.kind is kind]
        counts = {row: 0 for row in EMOTION_ROWS}
        unadjudicated = 0
        for record in subset:
            gold = record.gold_emotion
            if gold is not None:
                counts[gold.value] += 1
            elif record.annotator_labels:
                unadjudicated += 1
        report.emotion_by_kind[kind.value] = {
            "n": sum(counts.values()),
            "counts": counts,
            "unadjudicated": unadjudicated,
            "alpha": _alpha_entry(subset),
        }
    return report


def _presentation(report: StatsReport) -> dict:
    """Derived percentage strings; regenerated from counts, never parsed back."""
    cross_tab_pct = {
        row: {column: pct(count, report.n_valid) for column, count in cells.items()}
        for row, cells in report.cross_tab.items()
    }
    rates_pct = {
        name: pct(numerator, denominator)
        for name, (numerator, denominator) in report.conditional_rates.items()
    }
    emotion_pct: dict[str, dict[str, str]] = {}
    for kind, entry in report.emotion_by_kind.items():
        emotion_pct[kind] = {
            row: pct(count, entry["n"]) for row, count in entry["counts"].items()
        }
    deltas: dict[str, str] = {}
    literal = report.emotion_by_kind.get(PairKind.METAPHOR_VS_LITERAL.value, {})
    same_spec = report.emotion_by_kind.get(PairKind.METAPHOR_VS_SAME_SPECIFICITY_LITERAL.value, {})
    if literal.get("n") and same_spec.get("n"):
        base = emotion_pct[PairKind.METAPHOR_VS_LITERAL.value]
        other = emotion_pct[PairKind.METAPHOR_VS_SAME_SPECIFICITY_LITERAL.value]
        deltas = {row: signed_delta(other[row], base[row]) for row in EMOTION_ROWS}
    return {
        "specificityDistributionPct": {
            column: pct(count, report.n_valid)
            for column, count in report.specificity_distribution.items()
        },
        "caseSplitPct": {
            case: pct(count, report.n_valid) for case, count in report.case_split.items()
        },
        "crossTabPct": cross_tab_pct,
        "conditionalRatesPct": rates_pct,
        "emotionByKindPct": emotion_pct,
        "emotionDeltasVsLiteral": deltas,
    }


def report_to_dict(report: StatsReport) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "release": report.release,
        "counts": {
            "total": report.n_total,
            "byKind": dict(report.n_by_kind),
            "specificityTested": report.n_tested,
            "valid": report.n_valid,
            "invalid": report.n_invalid,
            "invalidReasons": dict(report.invalid_reasons),
        },
        "specificityDistribution": dict(report.specificity_distribution),
        "caseSplit": dict(report.case_split),
        "crossTab": {
            "merged": {row: dict(cells) for row, cells in report.cross_tab.items()},
            "unmerged": {row: dict(cells) for row, cells in report.cross_tab_unmerged.items()},
        },
        "conditionalRates": {
            name: {"numerator": numerator, "denominator": denominator}
            for name, (numerator, denominator) in report.conditional_rates.items()
        },
        "emotionByKind": {
            kind: {
                "n": entry["n"],
                "counts": dict(entry["counts"]),
                "unadjudicated": entry["unadjudicated"],
                "alpha": dict(entry["alpha"]),
            }
            for kind, entry in report.emotion_by_kind.items()
        },
        "invalidRecords": [
            {"recordId": record_id, "reason": reason} for record_id, reason in report.invalid_records
        ],
        "presentation": _presentation(report),
    }


def report_from_dict(payload: dict) -> StatsReport:
    counts = payload["counts"]
    return StatsReport(
        release=payload["release"],
        n_total=counts["total"],
        n_by_kind=dict(counts["byKind"]),
        n_tested=counts["specificityTested"],
        n_valid=counts["valid"],
        n_invalid=counts["invalid"],
        invalid_reasons=dict(counts["invalidReasons"]),
        specificity_distribution=dict(payload["specificityDistribution"]),
        case_split=dict(payload["caseSplit"]),
        cross_tab={row: dict(cells) for row, cells in payload["crossTab"]["merged"].items()},
        cross_tab_unmerged={row: dict(cells) for row, cells in payload["crossTab"]["unmerged"].items()},
        conditional_rates={
            name: [entry["numerator"], entry["denominator"]]
            for name, entry in payload["conditionalRates"].items()
        },
        emotion_by_kind={
            kind: {
                "n": entry["n"],
                "counts": dict(entry["counts"]),
                "unadjudicated": entry["unadjudicated"],
                "alpha": dict(entry["alpha"]),
            }
            for kind, entry in payload["emotionByKind"].items()
        },
        invalid_records=[[item["recordId"], item["reason"]] for item in payload["invalidRecords"]],
    )


_KIND_TITLES = {
    PairKind.METAPHOR_VS_LITERAL.value: "metaphor vs literal",
    PairKind.METAPHOR_VS_SAME_SPECIFICITY_LITERAL.value: "metaphor vs same-specificity literal",
    PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL.value: "literal vs more-specific literal",
}

_SPEC_ROW_TITLES = {
    "first_more_specific": "metaphor more specific",
    "second_more_specific": "metaphor more general",
    "same_level": "same level",
}

_CROSS_ROW_TITLES = {MORE_EMOTIONAL: "more emotional", LESS_OR_SAME: "less/same emotional"}

_CROSS_COLUMN_TITLES = {
    "first_more_specific": "more specific",
    "second_more_specific": "more general",
    "same_level": "same level",
}


def _alpha_text(entry: dict) -> str:
    if entry["status"] == "ok":
        return format(entry["value"], ".4f")
    if entry["status"] == "undefined":
        return "undefined (zero expected disagreement)"
    return "n/a (insufficient data)"


def _emotion_row_titles(kind: str) -> dict[str, str]:
    if kind == PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL.value:
        return {
            "second": "more specific more emotional",
            "first": "more general more emotional",
            "same": "similarly emotional",
        }
    return {
        "first": "metaphor more emotional",
        "second": "literal more emotional",
        "same": "similarly emotional",
    }


def _emotion_row_order(kind: str) -> tuple[str, ...]:
    if kind == PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL.value:
        return ("second", "first", "same")
    return ("first", "second", "same")


def _render_text(report: StatsReport) -> str:
    p = _presentation(report)
    lines = [
        "specificity & emotion report",
        f"release: {report.release}",
        f"records: {report.n_total} total",
    ]
    for kind in PairKind:
        lines.append(f"  {kind.value}: {report.n_by_kind.get(kind.value, 0)}")
    lines.append("")

    lines.append("specificity (metaphor vs literal pairs)")
    lines.append(f"  tested: {report.n_tested}  valid: {report.n_valid}  invalid: {report.n_invalid}")
    reasons = ", ".join(f"{name} {count}" for name, count in report.invalid_reasons.items())
    lines.append(f"  invalid reasons: {reasons}")
    for column in SPECIFICITY_COLUMNS:
        count = report.specificity_distribution.get(column, 0)
        lines.append(
            f"  {_SPEC_ROW_TITLES[column]}: {count} ({p['specificityDistributionPct'][column]}%)"
        )
    direct = report.case_split.get(SpecificityCase.DIRECT_RELATION.value, 0)
    common = report.case_split.get(SpecificityCase.COMMON_HYPERNYM.value, 0)
    lines.append(
        "  case split: direct relation "
        f"{direct} ({p['caseSplitPct'][SpecificityCase.DIRECT_RELATION.value]}%)"
        f" / common hypernym {common} ({p['caseSplitPct'][SpecificityCase.COMMON_HYPERNYM.value]}%)"
    )
    lines.append("")

    lines.append("specificity x emotion (valid, gold-labeled metaphor-literal pairs)")
    for row in (MORE_EMOTIONAL, LESS_OR_SAME):
        for column in SPECIFICITY_COLUMNS:
            count = report.cross_tab[row][column]
            lines.append(
                f"  {_CROSS_ROW_TITLES[row]} & {_CROSS_COLUMN_TITLES[column]}: "
                f"{count} ({p['crossTabPct'][row][column]}%)"
            )
    rate = report.conditional_rates["more_emotional_given_more_specific"]
    lines.append(
        f"  P(more emotional | more specific) = {p['conditionalRatesPct']['more_emotional_given_more_specific']}%"
        f"  [{rate[0]}/{rate[1]}]"
    )
    rate = report.conditional_rates["more_specific_given_more_emotional"]
    lines.append(
        f"  P(more specific | more emotional) = {p['conditionalRatesPct']['more_specific_given_more_emotional']}%"
        f"  [{rate[0]}/{rate[1]}]"
    )
    lines.append("")

    for kind in PairKind:
        entry = report.emotion_by_kind[kind.value]
        titles = _emotion_row_titles(kind.value)
        lines.append(f"emotion: {_KIND_TITLES[kind.value]}")
        lines.append(f"  pairs with gold label: {entry['n']} (unadjudicated: {entry['unadjudicated']})")
        for row in _emotion_row_order(kind.value):
            text = f"  {titles[row]}: {entry['counts'][row]} ({p['emotionByKindPct'][kind.value][row]}%)"
            if (
                kind is PairKind.METAPHOR_VS_SAME_SPECIFICITY_LITERAL
                and p["emotionDeltasVsLiteral"]
            ):
                text += f" [{p['emotionDeltasVsLiteral'][row]} vs literal pairs]"
            lines.append(text)
        lines.append(f"  krippendorff alpha: {_alpha_text(entry['alpha'])}")
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def render_report(report: StatsReport, fmt: str = "text") -> str:
    """Render as human-readable text or as the versioned JSON document.

    Neither form carries a trailing newline; callers add one when writing
    to a stream or HTTP body.
    """
    if fmt == "json":
        return json.dumps(report_to_dict(report), sort_keys=True, indent=2)
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown report format {fmt!r}")
