"""Nominal Krippendorff's alpha over (annotator, item) label assignments.

Computed exactly with rational arithmetic from the coincidence matrix of
paired labels within items: alpha = 1 - Do/De where Do is the observed
disagreement among within-item label pairs and De the disagreement expected
from the pooled label marginals.  Items carrying fewer than two labels are
unpairable and ignored.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Mapping

from .errors import InsufficientData, UndefinedAlpha


@dataclass
class AlphaInput:
    """Labels keyed by (annotator_id, item_id); nominal metric only."""

    labels: dict[tuple[str, str], Hashable]

    @classmethod
    def from_records(cls, records) -> "AlphaInput":
        labels: dict[tuple[str, str], Hashable] = {}
        for record in records:
            for annotator, label in record.annotator_labels.items():
                labels[(annotator, record.record_id)] = label.value
        return cls(labels)


def krippendorff_alpha(data: AlphaInput | Mapping[tuple[str, str], Hashable]) -> float:
    """Nominal alpha in [-1, 1].

    Raises InsufficientData without two annotators sharing at least one
    item, and UndefinedAlpha when the expected disagreement is zero (every
    pairable label falls in a single category) -- reported distinctly
    rather than as 1.0.
    """
    labels = data.labels if isinstance(data, AlphaInput) else dict(data)
    annotators = {annotator for annotator, _ in labels}
    if len(annotators) < 2:
        raise InsufficientData("labels from at least two annotators are required")

    units: dict[str, list[Hashable]] = defaultdict(list)
    for (_, item), value in labels.items():
        units[item].append(value)
    pairable = {item: values for item, values in units.items() if len(values) > 1}
    if not pairable:
        raise InsufficientData("no item carries labels from two or more annotators")

    n = sum(len(values) for values in pairable.values())
    marginals: Counter = Counter()
    observed = Fraction(0)
    for values in pairable.values():
        m = len(values)
        counts = Counter(values)
        marginals.update(counts)
        disagreeing_pairs = m * m - sum(c * c for c in counts.values())
        observed += Fraction(disagreeing_pairs, m - 1)

    expected_pairs = n * n - sum(c * c for c in marginals.values())
    if expected_pairs == 0:
        raise UndefinedAlpha("expected disagreement is zero: only one category in use")

    observed_disagreement = observed / n
    expected_disagreement = Fraction(expected_pairs, n * (n - 1))
    return float(1 - observed_disagreement / expected_disagreement)
