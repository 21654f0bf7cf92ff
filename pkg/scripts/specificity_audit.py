#!/usr/bin/env python3
"""Per-pair specificity audit of a corpus.

Prints one line per record with the resolved synsets, the verdict, the
evidence case, and the invalidity reason where applicable.  Useful for
inspecting release drift when the same corpus is analyzed against
different WordNet versions.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lexispec.corpus import attach_specificity, load_corpus
from lexispec.fixture import load_fixture
from lexispec.hierarchy import build_graph
from lexispec.synsets import display_key
from lexispec.wndb import load_wndb


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--wordnet", metavar="DIR")
    group.add_argument("--fixture", metavar="FILE")
    parser.add_argument("--corpus", required=True, metavar="FILE")
    args = parser.parse_args()

    db = load_wndb(args.wordnet) if args.wordnet else load_fixture(args.fixture)
    graph = build_graph(db)
    records = attach_specificity(load_corpus(args.corpus), db, graph)

    print(f"# release: {db.release}")
    for record in records:
        left = display_key(db, record.synset1) if record.synset1 else str(record.term1)
        right = display_key(db, record.synset2) if record.synset2 else str(record.term2)
        verdict = record.verdict.value if record.verdict else "unresolved"
        case = record.evidence.case.value if record.evidence else "-"
        flag = f"  INVALID({record.invalid_reason})" if record.invalid_reason else ""
        print(f"{record.record_id}\t{record.kind.value}\t{left} vs {right}\t{verdict}\t{case}{flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
