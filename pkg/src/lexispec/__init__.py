"""lexispec: relative specificity of word senses over the WordNet hypernym
hierarchy, plus the corpus analytics and annotation tooling built on it."""

from .agreement import AlphaInput, krippendorff_alpha
from .corpus import EmotionLabel, PairKind, ParallelRecord, attach_specificity, load_corpus
from .fixture import load_fixture, loads_fixture, to_fixture
from .hierarchy import (
    CommonHypernym,
    HypernymGraph,
    build_graph,
    direct_hyponyms,
    hypernym_closure,
    is_ancestor,
    lowest_common_hypernyms,
    paths_to_roots,
    sister_terms,
)
from .specificity import (
    SpecificityCase,
    SpecificityEvidence,
    SpecificityVerdict,
    classify_case,
    compare_specificity,
    more_specific_candidates,
    same_specificity_candidates,
)
from .stats import StatsReport, compute_stats, render_report
from .synsets import (
    LexicalDatabase,
    SenseKey,
    Synset,
    SynsetId,
    canonical_key,
    lookup_synsets,
    resolve_sense_key,
)
from .wndb import load_wndb

__version__ = "0.1.0"

__all__ = [
    "AlphaInput",
    "CommonHypernym",
    "EmotionLabel",
    "HypernymGraph",
    "LexicalDatabase",
    "PairKind",
    "ParallelRecord",
    "SenseKey",
    "SpecificityCase",
    "SpecificityEvidence",
    "SpecificityVerdict",
    "StatsReport",
    "Synset",
    "SynsetId",
    "attach_specificity",
    "build_graph",
    "canonical_key",
    "classify_case",
    "compare_specificity",
    "compute_stats",
    "direct_hyponyms",
    "hypernym_closure",
    "is_ancestor",
    "krippendorff_alpha",
    "load_corpus",
    "load_fixture",
    "load_wndb",
    "loads_fixture",
    "lookup_synsets",
    "lowest_common_hypernyms",
    "more_specific_candidates",
    "paths_to_roots",
    "render_report",
    "resolve_sense_key",
    "same_specificity_candidates",
    "sister_terms",
    "to_fixture",
]
