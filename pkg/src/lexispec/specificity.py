"""Relative specificity of two word senses via their hierarchy positions.

Two routes decide every comparison.  When one synset lies on an upward
hypernym path from the other, the relation itself is decisive: the hypernym
is the more general sense, the hyponym the more specific one.  Otherwise
both synsets are located under their lowest common hypernym and the one
farther below it (more hops) counts as more specific.  No common hypernym
at all makes the pair incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import UnknownSynset
from .hierarchy import (
    CommonHypernym,
    HypernymGraph,
    direct_hyponyms,
    is_ancestor,
    lowest_common_hypernyms,
    shortest_up_chain,
    sister_terms,
)
from .synsets import SynsetId


class SpecificityVerdict(Enum):
    FIRST_MORE_SPECIFIC = "first_more_specific"
    SECOND_MORE_SPECIFIC = "second_more_specific"
    SAME_LEVEL = "same_level"
    INCOMPARABLE = "incomparable"


class SpecificityCase(Enum):
    DIRECT_RELATION = "direct_relation"
    COMMON_HYPERNYM = "common_hypernym"
    NO_COMMON_HYPERNYM = "no_common_hypernym"


@dataclass(frozen=True)
class SpecificityEvidence:
    """Auditable trace of how a verdict was reached.

    ``ancestor_chain`` is present exactly for the direct-relation case (the
    witness hypernym chain from the lower synset up to the higher one);
    ``lch`` holds all minimal common hypernyms for the hierarchy-position
    case, with ``chosen`` the tie-broken representative the verdict used.
    """

    case: SpecificityCase
    ancestor_chain: tuple[SynsetId, ...] | None = None
    lch: tuple[CommonHypernym, ...] | None = None
    chosen: CommonHypernym | None = None


def pick_representative(candidates: list[CommonHypernym]) -> CommonHypernym:
    """Tie-break equal-hop-sum common hypernyms.

    Prefers the candidate with the widest hop gap (the most decisive
    evidence), then the smallest ancestor id.
    """
    return sorted(candidates, key=lambda c: (-abs(c.hops_first - c.hops_second), c.ancestor))[0]


def compare_specificity(
    graph: HypernymGraph, a: SynsetId, b: SynsetId
) -> tuple[SpecificityVerdict, SpecificityEvidence]:
    """Which of two synsets is more specific, with evidence.

    The direct relation wins over any other shared ancestors whenever it
    holds in either direction.  Equal hop counts under the chosen common
    hypernym mean the same specificity level.
    """
    if a not in graph:
        raise UnknownSynset(str(a))
    if b not in graph:
        raise UnknownSynset(str(b))

    if a == b:
        return SpecificityVerdict.SAME_LEVEL, SpecificityEvidence(
            SpecificityCase.DIRECT_RELATION, ancestor_chain=(a,)
        )
    if is_ancestor(graph, a, b):
        chain = shortest_up_chain(graph, b, a)
        return SpecificityVerdict.SECOND_MORE_SPECIFIC, SpecificityEvidence(
            SpecificityCase.DIRECT_RELATION, ancestor_chain=tuple(chain)
        )
    if is_ancestor(graph, b, a):
        chain = shortest_up_chain(graph, a, b)
        return SpecificityVerdict.FIRST_MORE_SPECIFIC, SpecificityEvidence(
            SpecificityCase.DIRECT_RELATION, ancestor_chain=tuple(chain)
        )

    candidates = lowest_common_hypernyms(graph, a, b)
    if not candidates:
        return SpecificityVerdict.INCOMPARABLE, SpecificityEvidence(SpecificityCase.NO_COMMON_HYPERNYM)
    chosen = pick_representative(candidates)
    if chosen.hops_first > chosen.hops_second:
        verdict = SpecificityVerdict.FIRST_MORE_SPECIFIC
    elif chosen.hops_first < chosen.hops_second:
        verdict = SpecificityVerdict.SECOND_MORE_SPECIFIC
    else:
        verdict = SpecificityVerdict.SAME_LEVEL
    return verdict, SpecificityEvidence(
        SpecificityCase.COMMON_HYPERNYM, lch=tuple(candidates), chosen=chosen
    )


def classify_case(graph: HypernymGraph, a: SynsetId, b: SynsetId) -> SpecificityCase:
    """The evidence case compare_specificity would produce for this pair."""
    return compare_specificity(graph, a, b)[1].case


def same_specificity_candidates(graph: HypernymGraph, metaphor_synset: SynsetId) -> set[SynsetId]:
    """Sister terms of the given synset: paraphrase candidates at the same
    hierarchy level.  Picking the appropriate literal member is a human call."""
    return sister_terms(graph, metaphor_synset)


def more_specific_candidates(graph: HypernymGraph, literal_synset: SynsetId) -> set[SynsetId]:
    """Direct hyponyms of the given synset: strictly more specific paraphrase
    candidates."""
    return direct_hyponyms(graph, literal_synset)
