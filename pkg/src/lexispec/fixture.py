"""Portable line-oriented synset fixture format.

One synset per line, four tab-separated fields::

    id<TAB>lemma1,lemma2<TAB>gloss<TAB>hypernym_id1,hypernym_id2

Ids are either ``pos:offset`` or sense-key style (``rip.v.04``); ``-``
marks an empty hypernym list; ``#`` starts a comment line.  Hyponym
pointers are synthesized as the inverses of the declared hypernyms.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DanglingPointer, InvalidSenseKey, MalformedLine, MissingFile
from .synsets import (
    HYPERNYM,
    HYPONYM,
    LexicalDatabase,
    Pointer,
    SenseKey,
    Synset,
    SynsetId,
    build_database,
)


def load_fixture(path) -> LexicalDatabase:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MissingFile(str(path)) from None
    return loads_fixture(text, name=str(path))


def loads_fixture(text: str, name: str = "<fixture>") -> LexicalDatabase:
    rows: list[tuple[int, int, list[str]]] = []
    byte_pos = 0
    for line_no, raw in enumerate(text.splitlines(keepends=True), start=1):
        start = byte_pos
        byte_pos += len(raw.encode("utf-8"))
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise MalformedLine(name, line_no, start, f"expected 4 tab-separated fields, got {len(cols)}")
        rows.append((line_no, start, cols))

    # first pass: map id strings to synset identities; sense-key style ids
    # get synthetic offsets assigned in file order
    ids: dict[str, SynsetId] = {}
    taken: set[SynsetId] = set()
    pending: list[tuple[str, str, int, int]] = []
    for line_no, start, (id_str, _, _, _) in rows:
        if id_str in ids or any(id_str == p[0] for p in pending):
            raise MalformedLine(name, line_no, start, f"duplicate synset id {id_str!r}")
        try:
            sid = SynsetId.parse(id_str)
        except ValueError:
            sid = None
        if sid is not None:
            if sid in taken:
                raise MalformedLine(name, line_no, start, f"duplicate synset identity {sid}")
            ids[id_str] = sid
            taken.add(sid)
            continue
        try:
            key = SenseKey.parse(id_str)
        except InvalidSenseKey:
            raise MalformedLine(name, line_no, start, f"unparseable synset id {id_str!r}") from None
        pending.append((id_str, key.pos, line_no, start))

    counter = 1
    for id_str, pos, _, _ in pending:
        while SynsetId(pos, counter) in taken:
            counter += 1
        sid = SynsetId(pos, counter)
        ids[id_str] = sid
        taken.add(sid)
        counter += 1

    hypernyms: dict[SynsetId, list[SynsetId]] = {}
    hyponyms: dict[SynsetId, list[SynsetId]] = {}
    parsed: list[tuple[SynsetId, tuple[str, ...], str]] = []
    for line_no, start, (id_str, lemma_str, gloss, hyp_str) in rows:
        sid = ids[id_str]
        lemmas = tuple(token.strip() for token in lemma_str.split(","))
        if not lemmas or any(not lemma for lemma in lemmas):
            raise MalformedLine(name, line_no, start, "empty lemma in lemma list")
        parents: list[SynsetId] = []
        if hyp_str.strip() != "-":
            for token in hyp_str.split(","):
                token = token.strip()
                if token not in ids:
                    raise DanglingPointer(f"{name}:{line_no}: unknown hypernym id {token!r}")
                parents.append(ids[token])
        hypernyms[sid] = parents
        for parent in parents:
            hyponyms.setdefault(parent, []).append(sid)
        parsed.append((sid, lemmas, gloss.strip()))

    synsets: dict[SynsetId, Synset] = {}
    index: dict[tuple[str, str], list[SynsetId]] = {}
    for sid, lemmas, gloss in parsed:
        pointers = tuple(Pointer(HYPERNYM, parent) for parent in sorted(hypernyms[sid])) + tuple(
            Pointer(HYPONYM, child) for child in sorted(hyponyms.get(sid, ()))
        )
        synsets[sid] = Synset(id=sid, lemmas=lemmas, gloss=gloss, pointers=pointers)
        for lemma in lemmas:
            index.setdefault((lemma.lower(), sid.pos), []).append(sid)

    db = build_database(synsets, {key: tuple(v) for key, v in index.items()}, release="fixture")

    from .hierarchy import build_graph

    build_graph(db)  # raises CycleDetected on self-loops and longer cycles
    return db


def to_fixture(db: LexicalDatabase) -> str:
    """Canonical fixture serialization: one line per synset, sorted by id.

    Loading the same files twice yields byte-identical output, which is the
    determinism check used by the tests.  Examples and non-hypernym pointer
    kinds are not representable in this format.
    """
    lines = []
    for sid in sorted(db.synsets):
        synset = db.synsets[sid]
        gloss = " ".join(synset.gloss.split())
        parents = sorted(synset.hypernym_ids())
        lines.append(
            "\t".join(
                [
                    str(sid),
                    ",".join(synset.lemmas),
                    gloss,
                    ",".join(str(p) for p in parents) if parents else "-",
                ]
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")
