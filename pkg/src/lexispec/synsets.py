"""Core lexical types: synset identities, sense keys, pointers, and the
immutable in-memory database they live in.

A synset is identified by (part of speech, data-file offset).  Sense keys
such as ``rip.v.04`` are positional handles into the (lemma, pos) index and
are only meaningful relative to a loaded database.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, replace

from .errors import DanglingPointer, InvalidSenseKey, SenseOutOfRange, UnknownLemma

log = logging.getLogger(__name__)

POS_TAGS = ("n", "v", "a", "r", "s")

HYPERNYM_SYMBOL = "@"
HYPONYM_SYMBOL = "~"


@dataclass(frozen=True, order=True)
class SynsetId:
    """Identity of one synset: part-of-speech tag plus file offset."""

    pos: str
    offset: int

    def __post_init__(self) -> None:
        if self.pos not in POS_TAGS:
            raise ValueError(f"bad part-of-speech tag {self.pos!r}")
        if self.offset < 0:
            raise ValueError(f"negative synset offset {self.offset}")

    def __str__(self) -> str:
        return f"{self.pos}:{self.offset}"

    @classmethod
    def parse(cls, text: str) -> "SynsetId":
        pos, sep, offset = text.partition(":")
        if not sep or pos not in POS_TAGS or not offset.isdigit():
            raise ValueError(f"not a synset id: {text!r}")
        return cls(pos, int(offset))


_SENSE_KEY_RE = re.compile(r"^(.+)\.([nvars])\.(\d+)$")


@dataclass(frozen=True, order=True)
class SenseKey:
    """A lemma-relative sense handle rendered as ``lemma.pos.NN``."""

    lemma: str
    pos: str
    sense_number: int

    def __str__(self) -> str:
        return f"{self.lemma}.{self.pos}.{self.sense_number:02d}"

    @classmethod
    def parse(cls, text: str) -> "SenseKey":
        m = _SENSE_KEY_RE.match(text.strip())
        if not m:
            raise InvalidSenseKey(f"not a sense key: {text!r}")
        lemma, pos, number = m.group(1), m.group(2), int(m.group(3))
        if not lemma:
            raise InvalidSenseKey(f"empty lemma in sense key {text!r}")
        if number < 1:
            raise InvalidSenseKey(f"sense number must be >= 1: {text!r}")
        return cls(lemma.lower(), pos, number)


@dataclass(frozen=True, order=True)
class PointerKind:
    """Relation tag of a synset pointer, kept as the raw wndb symbol.

    ``@`` is the hypernym relation and ``~`` the hyponym relation; every
    other symbol is preserved opaquely.
    """

    symbol: str

    @property
    def is_hypernym(self) -> bool:
        return self.symbol == HYPERNYM_SYMBOL

    @property
    def is_hyponym(self) -> bool:
        return self.symbol == HYPONYM_SYMBOL


HYPERNYM = PointerKind(HYPERNYM_SYMBOL)
HYPONYM = PointerKind(HYPONYM_SYMBOL)


@dataclass(frozen=True, order=True)
class Pointer:
    kind: PointerKind
    target: SynsetId


@dataclass(frozen=True)
class Synset:
    id: SynsetId
    lemmas: tuple[str, ...]
    gloss: str
    examples: tuple[str, ...] = ()
    pointers: tuple[Pointer, ...] = ()

    def hypernym_ids(self) -> tuple[SynsetId, ...]:
        return tuple(p.target for p in self.pointers if p.kind.is_hypernym)

    def hyponym_ids(self) -> tuple[SynsetId, ...]:
        return tuple(p.target for p in self.pointers if p.kind.is_hyponym)


@dataclass(frozen=True)
class LexicalDatabase:
    """Immutable synset store plus the (lemma, pos) sense index.

    Safe to share across any number of concurrent readers once built.
    """

    synsets: dict[SynsetId, Synset]
    index: dict[tuple[str, str], tuple[SynsetId, ...]]
    release: str = "unknown"

    def __contains__(self, sid: SynsetId) -> bool:
        return sid in self.synsets

    def __len__(self) -> int:
        return len(self.synsets)


def build_database(
    synsets: dict[SynsetId, Synset],
    index: dict[tuple[str, str], tuple[SynsetId, ...]],
    release: str = "unknown",
) -> LexicalDatabase:
    """Validate pointer targets, repair @/~ asymmetries, and freeze.

    Asymmetric hypernym/hyponym pairs are repaired by synthesizing the
    missing inverse (real wndb releases contain minor asymmetries); each
    repair is reported as a warning diagnostic.
    """
    for sid, synset in synsets.items():
        for pointer in synset.pointers:
            if pointer.target not in synsets:
                raise DanglingPointer(
                    f"{sid}: pointer {pointer.kind.symbol} -> {pointer.target} has no target synset"
                )

    missing: dict[SynsetId, set[Pointer]] = {}
    for sid, synset in synsets.items():
        for pointer in synset.pointers:
            if pointer.kind.is_hypernym:
                inverse = Pointer(HYPONYM, sid)
            elif pointer.kind.is_hyponym:
                inverse = Pointer(HYPERNYM, sid)
            else:
                continue
            if inverse not in synsets[pointer.target].pointers:
                missing.setdefault(pointer.target, set()).add(inverse)
    for sid, extras in missing.items():
        current = synsets[sid]
        synsets[sid] = replace(current, pointers=current.pointers + tuple(sorted(extras)))
        log.warning("repaired %d asymmetric pointer pair(s) on %s", len(extras), sid)

    for (lemma, pos), ids in index.items():
        for sid in ids:
            if sid not in synsets:
                raise DanglingPointer(
                    f"index entry ({lemma!r}, {pos}) references missing synset {sid}"
                )

    return LexicalDatabase(
        synsets=dict(synsets),
        index={key: tuple(ids) for key, ids in index.items()},
        release=release,
    )


def lookup_synsets(db: LexicalDatabase, lemma: str, pos: str) -> list[Synset]:
    """Candidate synsets of an already-lemmatized, lowercased lemma, in
    index-file sense order.  Absence is an empty list, not an error."""
    ids = db.index.get((lemma.lower(), pos), ())
    return [db.synsets[sid] for sid in ids]


def resolve_sense_key(db: LexicalDatabase, key: SenseKey | str) -> SynsetId:
    if isinstance(key, str):
        key = SenseKey.parse(key)
    ids = db.index.get((key.lemma, key.pos), ())
    if not ids and key.pos == "s":
        # adjective satellites are indexed under their head file's pos
        ids = db.index.get((key.lemma, "a"), ())
    if not ids:
        raise UnknownLemma(f"no {key.pos!r} senses of {key.lemma!r}")
    if key.sense_number > len(ids):
        raise SenseOutOfRange(
            f"{key}: only {len(ids)} sense(s) of {key.lemma!r} in the loaded database"
        )
    return ids[key.sense_number - 1]


def synset_for_key(db: LexicalDatabase, key: SenseKey | str) -> Synset:
    return db.synsets[resolve_sense_key(db, key)]


def canonical_key(db: LexicalDatabase, sid: SynsetId, lemma: str | None = None) -> SenseKey | None:
    """Index-relative sense key of a synset, or None when it is not indexed.

    The sense number is the synset's 1-based position in the index entry of
    ``lemma`` (first lemma of the synset by default).
    """
    synset = db.synsets.get(sid)
    if synset is None or not synset.lemmas:
        return None
    lem = (lemma or synset.lemmas[0]).lower()
    index_pos = "a" if sid.pos == "s" else sid.pos
    ids = db.index.get((lem, index_pos), ())
    for number, candidate in enumerate(ids, start=1):
        if candidate == sid:
            return SenseKey(lem, sid.pos, number)
    return None


def display_key(db: LexicalDatabase, sid: SynsetId) -> str:
    """Preferred printable handle: the canonical sense key, else ``pos:offset``."""
    key = canonical_key(db, sid)
    return str(key) if key is not None else str(sid)
