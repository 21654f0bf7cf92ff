"""Builders for controlled corpora that realize chosen statistics exactly.

Every generated record reuses one of a handful of template synset pairs
whose hierarchy relation is fixed by the template fixture below, so a
corpus seeded with given cell counts reproduces those counts exactly when
analyzed.  Used by the acceptance suite and by scripts/reproduce_tables.py.
"""

from __future__ import annotations

from typing import Mapping

from .corpus import PairKind
from .fixture import loads_fixture
from .synsets import LexicalDatabase

TEMPLATE_FIXTURE = """\
# synthetic verb templates for controlled corpora
parentact.v.01\tparentact\tbroad template action\t-
childact.v.01\tchildact\tnarrow template action\tparentact.v.01
rowact.v.01\trowact\tfirst sister template action\tparentact.v.01
sisteract.v.01\tsisteract\tsecond sister template action\tparentact.v.01
stemact.v.01\tstemact\tshared stem template action\t-
midact.v.01\tmidact\tintermediate template action\tstemact.v.01
deepact.v.01\tdeepact\tdeep template action\tmidact.v.01
shallowact.v.01\tshallowact\tshallow template action\tstemact.v.01
lonelyact.v.01\tlonelyact\tisolated template action\t-
strayact.v.01\tstrayact\tsecond isolated template action\t-
"""

# term pairs realizing each specificity outcome under the template fixture
PAIRS = {
    "first_more_specific": ("childact.v.01", "parentact.v.01"),
    "second_more_specific": ("parentact.v.01", "childact.v.01"),
    "same_level": ("sisteract.v.01", "rowact.v.01"),
    "direct": ("childact.v.01", "parentact.v.01"),
    "common": ("deepact.v.01", "shallowact.v.01"),
    "incomparable": ("lonelyact.v.01", "strayact.v.01"),
}


def template_database() -> LexicalDatabase:
    return loads_fixture(TEMPLATE_FIXTURE, name="<template fixture>")


def _record_line(index: int, kind: PairKind, pair: tuple[str, str], gold: str) -> str:
    term1, term2 = pair
    return "\t".join(
        [
            f"s{index:04d}",
            kind.value,
            term1,
            f"Template sentence {index} uses the first term.",
            term2,
            f"Template sentence {index} uses the second term.",
            f"seed={gold}",
            gold,
        ]
    )


def crosstab_corpus(cells: Mapping[tuple[str, str], int]) -> str:
    """Metaphor-vs-literal corpus seeded cell by cell.

    Keys are (emotion label of the pair, specificity column token); the
    'less/same emotional' row of the merged cross-tab is seeded with the
    'second' label.
    """
    lines = ["# synthetic cross-tab corpus"]
    index = 0
    for (emotion, column), count in cells.items():
        for _ in range(count):
            index += 1
            lines.append(_record_line(index, PairKind.METAPHOR_VS_LITERAL, PAIRS[column], emotion))
    return "\n".join(lines) + "\n"


def emotion_corpus(kind_counts: Mapping[PairKind, tuple[int, int, int]]) -> str:
    """Records per kind with gold labels seeded as (first, second, same) counts."""
    lines = ["# synthetic emotion-distribution corpus"]
    index = 0
    for kind, (first, second, same) in kind_counts.items():
        if kind is PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL:
            pair = PAIRS["second_more_specific"]  # term2 is the more specific literal
        else:
            pair = PAIRS["first_more_specific"]
        for gold, count in (("first", first), ("second", second), ("same", same)):
            for _ in range(count):
                index += 1
                lines.append(_record_line(index, kind, pair, gold))
    return "\n".join(lines) + "\n"


def case_split_corpus(direct: int, common: int) -> str:
    """Valid metaphor-literal pairs split between the two evidence cases."""
    lines = ["# synthetic case-split corpus"]
    index = 0
    for case, count in (("direct", direct), ("common", common)):
        for _ in range(count):
            index += 1
            lines.append(_record_line(index, PairKind.METAPHOR_VS_LITERAL, PAIRS[case], "first"))
    return "\n".join(lines) + "\n"


def table_crosstab_corpus() -> str:
    """The published specificity-by-emotion cross-tab cell counts."""
    return crosstab_corpus(
        {
            ("first", "first_more_specific"): 82,
            ("first", "second_more_specific"): 10,
            ("first", "same_level"): 5,
            ("second", "first_more_specific"): 8,
            ("second", "second_more_specific"): 8,
            ("second", "same_level"): 1,
        }
    )


def table_emotion_corpus() -> str:
    """The published emotion distributions for the two metaphor comparisons."""
    return emotion_corpus(
        {
            PairKind.METAPHOR_VS_LITERAL: (143, 17, 11),
            PairKind.METAPHOR_VS_SAME_SPECIFICITY_LITERAL: (42, 23, 40),
        }
    )


def table_literal_corpus() -> str:
    """The published literal-vs-more-specific-literal distribution."""
    return emotion_corpus({PairKind.LITERAL_VS_MORE_SPECIFIC_LITERAL: (14, 32, 46)})


def published_case_split_corpus() -> str:
    return case_split_corpus(direct=98, common=16)
