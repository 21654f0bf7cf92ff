"""Command-line interface.

Subcommands: lookup, compare, sisters, hyponyms, analyze, alpha, serve.
Machine output goes to stdout, diagnostics to stderr; exit status is 0 on
success, 1 on usage errors, 2 on data errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import wire
from .agreement import AlphaInput, krippendorff_alpha
from .corpus import PairKind, load_corpus
from .errors import InsufficientData, LexispecError, UndefinedAlpha
from .fixture import load_fixture
from .hierarchy import build_graph, direct_hyponyms, sister_terms
from .service import ServiceConfig, serve
from .session import build_state, store_session_files
from .stats import compute_stats, render_report
from .synsets import lookup_synsets, resolve_sense_key
from .wndb import load_wndb


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_db_flags(parser) -> None:
    parser.add_argument("--wordnet", metavar="DIR", help="wndb database directory")
    parser.add_argument("--fixture", metavar="FILE", help="line-oriented fixture file")


def _add_format_flags(parser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")


def _open_database(args, parser):
    if bool(args.wordnet) == bool(args.fixture):
        parser.error("exactly one of --wordnet or --fixture is required")
    db = load_wndb(args.wordnet) if args.wordnet else load_fixture(args.fixture)
    return db, build_graph(db)


def _emit(text: str, args) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _cmd_lookup(args, parser) -> int:
    db, _ = _open_database(args, parser)
    candidates = lookup_synsets(db, args.lemma, args.pos)
    if args.format == "json":
        doc = {"schemaVersion": 1, "synsets": [wire.synset_payload(db, s) for s in candidates]}
        _emit(_dump(doc), args)
        return 0
    if not candidates:
        print(f"no {args.pos!r} senses of {args.lemma!r}", file=sys.stderr)
        return 0
    lines = []
    for number, synset in enumerate(candidates, start=1):
        lemmas = ", ".join(synset.lemmas)
        lines.append(f"{number}. {wire.display_key(db, synset.id)}  [{lemmas}]  {synset.gloss}")
    _emit("\n".join(lines), args)
    return 0


def _cmd_compare(args, parser) -> int:
    db, graph = _open_database(args, parser)
    doc = wire.specificity_payload(db, graph, args.a, args.b)
    if args.format == "json":
        _emit(_dump(doc), args)
        return 0
    lines = [doc["verdict"], f"case: {doc['case']}"]
    if "chain" in doc:
        lines.append("chain: " + " -> ".join(doc["chain"]))
    if "chosen" in doc:
        chosen = doc["chosen"]
        lines.append(
            f"common hypernym: {chosen['ancestor']}"
            f" (hops {chosen['hopsFirst']} vs {chosen['hopsSecond']})"
        )
    if len(doc.get("lch", [])) > 1:
        ties = ", ".join(entry["ancestor"] for entry in doc["lch"])
        lines.append(f"tied candidates: {ties}")
    _emit("\n".join(lines), args)
    return 0


def _candidate_listing(args, parser, picker) -> int:
    db, graph = _open_database(args, parser)
    sid = resolve_sense_key(db, args.key)
    candidates = wire.candidate_payload(db, picker(graph, sid))
    if args.format == "json":
        doc = {"schemaVersion": 1, "key": wire.display_key(db, sid), "candidates": candidates}
        _emit(_dump(doc), args)
        return 0
    if not candidates:
        print("no candidates", file=sys.stderr)
        return 0
    lines = [f"{c['key']}  [{', '.join(c['lemmas'])}]  {c['gloss']}" for c in candidates]
    _emit("\n".join(lines), args)
    return 0


def _cmd_sisters(args, parser) -> int:
    return _candidate_listing(args, parser, sister_terms)


def _cmd_hyponyms(args, parser) -> int:
    return _candidate_listing(args, parser, direct_hyponyms)


def _cmd_analyze(args, parser) -> int:
    db, graph = _open_database(args, parser)
    log_paths = store_session_files(args.store) if args.store else ()
    state = build_state(db, graph, args.corpus, log_paths)
    report = compute_stats(list(state.records.values()), release=db.release)
    _emit(render_report(report, args.format), args)
    return 0


def _alpha_entry_doc(records) -> dict:
    try:
        return {"status": "ok", "value": krippendorff_alpha(AlphaInput.from_records(records))}
    except InsufficientData:
        return {"status": "insufficient_data", "value": None}
    except UndefinedAlpha:
        return {"status": "undefined", "value": None}


def _cmd_alpha(args, parser) -> int:
    records = load_corpus(args.corpus)
    entries = {"overall": _alpha_entry_doc(records)}
    for kind in PairKind:
        entries[kind.value] = _alpha_entry_doc([r for r in records if r.kind is kind])
    if args.format == "json":
        _emit(_dump({"schemaVersion": 1, "alpha": entries}), args)
        return 0
    lines = []
    for name, entry in entries.items():
        value = format(entry["value"], ".4f") if entry["status"] == "ok" else entry["status"]
        lines.append(f"{name}: {value}")
    _emit("\n".join(lines), args)
    return 0


def _cmd_serve(args, parser) -> int:
    db, graph = _open_database(args, parser)
    store = os.environ.get("LEXISPEC_STORE") or args.store
    if not store:
        parser.error("--store (or LEXISPEC_STORE) is required")
    host, _, port_text = args.listen.rpartition(":")
    if not host or not port_text.isdigit():
        parser.error(f"--listen must be HOST:PORT, got {args.listen!r}")
    config = ServiceConfig(
        db=db,
        graph=graph,
        corpus_path=args.corpus,
        store_dir=store,
        host=host,
        port=int(port_text),
        fsync_on_append=not args.no_fsync,
    )
    handle = serve(config)
    print(f"listening on {handle.url}", flush=True)
    print(f"store: {Path(store).resolve()}", file=sys.stderr)
    try:
        handle.join()
    except KeyboardInterrupt:
        print("shutting down", file=sys.stderr)
        handle.shutdown()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexispec", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("lookup", parents=[], help="list candidate synsets of a lemma")
    _add_db_flags(p)
    _add_format_flags(p)
    p.add_argument("--lemma", required=True, help="lemmatized, lowercased target word")
    p.add_argument("--pos", required=True, choices=("n", "v", "a", "r", "s"))
    p.set_defaults(func=_cmd_lookup)

    p = sub.add_parser("compare", help="relative specificity of two senses")
    _add_db_flags(p)
    _add_format_flags(p)
    p.add_argument("--a", required=True, metavar="KEY", help="first sense key, e.g. rip.v.04")
    p.add_argument("--b", required=True, metavar="KEY", help="second sense key")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("sisters", help="same-specificity paraphrase candidates")
    _add_db_flags(p)
    _add_format_flags(p)
    p.add_argument("--key", required=True, metavar="KEY")
    p.set_defaults(func=_cmd_sisters)

    p = sub.add_parser("hyponyms", help="more-specific paraphrase candidates")
    _add_db_flags(p)
    _add_format_flags(p)
    p.add_argument("--key", required=True, metavar="KEY")
    p.set_defaults(func=_cmd_hyponyms)

    p = sub.add_parser("analyze", help="corpus statistics report")
    _add_db_flags(p)
    _add_format_flags(p)
    p.add_argument("--corpus", required=True, metavar="FILE")
    p.add_argument("--store", metavar="DIR", help="replay annotation session logs from DIR")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("alpha", help="inter-annotator agreement per pair kind")
    _add_format_flags(p)
    p.add_argument("--corpus", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("serve", help="run the annotation HTTP service")
    _add_db_flags(p)
    p.add_argument("--corpus", required=True, metavar="FILE")
    p.add_argument("--listen", default="127.0.0.1:8700", metavar="HOST:PORT")
    p.add_argument("--store", metavar="DIR", help="session store directory (env LEXISPEC_STORE overrides)")
    p.add_argument("--no-fsync", action="store_true", help="skip fsync after each event append")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except LexispecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
