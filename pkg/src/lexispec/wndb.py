"""Parser for WordNet 3.0-layout database directories (``index.*`` / ``data.*``).

Only the text wndb format is handled: one synset per data line, one lemma
per index line, license header lines starting with whitespace.  Any subset
of the four part-of-speech file pairs may be present; pointers into parts
of speech that were not loaded are dropped (with a diagnostic) so that the
pointer-resolution invariant holds for whatever subset was requested.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path

from .errors import DanglingPointer, MalformedLine, MissingFile
from .synsets import (
    POS_TAGS,
    LexicalDatabase,
    Pointer,
    PointerKind,
    Synset,
    SynsetId,
    build_database,
)

log = logging.getLogger(__name__)

FILE_SUFFIX = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}

_RELEASE_RE = re.compile(r"WordNet\s+(\d+\.\d+)")
_WORD_MARKER_RE = re.compile(r"\((\w+)\)$")


def _iter_content_lines(path: Path):
    """Yield (line_no, byte_pos, line) skipping the leading-space license header."""
    offset = 0
    with path.open("r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            start = offset
            offset += len(raw.encode("utf-8"))
            line = raw.rstrip("\r\n")
            if not line or line[0] == " ":
                continue
            yield line_no, start, line


def _detect_release(paths: list[Path]) -> str:
    for path in paths:
        with path.open("r", encoding="utf-8") as handle:
            for raw in handle:
                if not raw.startswith(" "):
                    break
                m = _RELEASE_RE.search(raw)
                if m:
                    return f"WordNet {m.group(1)}"
    return "wndb"


def split_gloss(text: str) -> tuple[str, tuple[str, ...]]:
    """Split a data-file gloss into definition text and quoted examples.

    Segments are separated by ';' outside double quotes; double-quoted
    segments are the example sentences, everything else is definition.
    """
    segments: list[str] = []
    buf: list[str] = []
    quoted = False
    for ch in text:
        if ch == '"':
            quoted = not quoted
        if ch == ";" and not quoted:
            segments.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    segments.append("".join(buf))

    definition_parts: list[str] = []
    examples: list[str] = []
    for segment in (s.strip() for s in segments):
        if not segment:
            continue
        if segment.startswith('"'):
            examples.append(segment.strip('"').strip())
        else:
            definition_parts.append(segment)
    return "; ".join(definition_parts), tuple(examples)


def _clean_word(word: str) -> str:
    # strip the syntactic-position marker some adjective entries carry, e.g. "galore(ip)"
    return _WORD_MARKER_RE.sub("", word)


def _parse_data_line(path: Path, line_no: int, byte_pos: int, line: str, file_pos: str):
    head, _, gloss_text = line.partition("|")
    tokens = head.split()
    try:
        offset = int(tokens[0])
        ss_type = tokens[2]
        word_count = int(tokens[3], 16)
        if word_count < 1:
            raise ValueError("word count must be >= 1")
        words = [tokens[4 + 2 * i] for i in range(word_count)]
        pointer_base = 4 + 2 * word_count
        pointer_count = int(tokens[pointer_base])
        pointers = []
        for i in range(pointer_count):
            base = pointer_base + 1 + 4 * i
            symbol = tokens[base]
            target_offset = int(tokens[base + 1])
            target_pos = tokens[base + 2]
            # tokens[base + 3] is the lexical source/target field, unused here
            if target_pos not in POS_TAGS:
                raise ValueError(f"bad pointer pos {target_pos!r}")
            pointers.append((symbol, target_pos, target_offset))
        # anything left before '|' is the verb frame list; skipped
    except (IndexError, ValueError) as exc:
        raise MalformedLine(str(path), line_no, byte_pos, f"bad data line: {exc}") from exc

    allowed = {"a", "s"} if file_pos == "a" else {file_pos}
    if ss_type not in allowed:
        raise MalformedLine(
            str(path), line_no, byte_pos, f"synset type {ss_type!r} unexpected in data.{FILE_SUFFIX[file_pos]}"
        )
    lemmas = tuple(_clean_word(w) for w in words)
    definition, examples = split_gloss(gloss_text.strip())
    return offset, ss_type, lemmas, definition, examples, pointers


def _parse_index_line(path: Path, line_no: int, byte_pos: int, line: str, file_pos: str):
    tokens = line.split()
    try:
        lemma = tokens[0]
        pos = tokens[1]
        synset_count = int(tokens[2])
        pointer_count = int(tokens[3])
        rest = tokens[4 + pointer_count:]
        int(rest[0])  # sense_cnt, duplicates synset_count in modern releases
        int(rest[1])  # tagsense_cnt
        offsets = [int(tok) for tok in rest[2:]]
    except (IndexError, ValueError) as exc:
        raise MalformedLine(str(path), line_no, byte_pos, f"bad index line: {exc}") from exc
    if pos != file_pos:
        raise MalformedLine(
            str(path), line_no, byte_pos, f"pos column {pos!r} does not match index.{FILE_SUFFIX[file_pos]}"
        )
    if len(offsets) != synset_count:
        raise MalformedLine(
            str(path), line_no, byte_pos,
            f"synset_cnt {synset_count} does not match {len(offsets)} listed offset(s)",
        )
    return lemma, offsets


def load_wndb(directory) -> LexicalDatabase:
    """Load a wndb directory into an immutable database.

    Requires at least one complete index/data file pair; hypernym acyclicity
    is validated at load via the hierarchy module.
    """
    root = Path(directory)
    if not root.is_dir():
        raise MissingFile(f"not a directory: {root}")

    pairs: dict[str, tuple[Path, Path]] = {}
    for pos, suffix in FILE_SUFFIX.items():
        index_path = root / f"index.{suffix}"
        data_path = root / f"data.{suffix}"
        if index_path.exists() or data_path.exists():
            if not index_path.exists():
                raise MissingFile(str(index_path))
            if not data_path.exists():
                raise MissingFile(str(data_path))
            pairs[pos] = (index_path, data_path)
    if not pairs:
        raise MissingFile(f"no wndb index/data files under {root}")

    raw: dict[tuple[str, int], tuple] = {}
    file_map: dict[tuple[str, int], SynsetId] = {}
    for file_pos, (_, data_path) in pairs.items():
        for line_no, byte_pos, line in _iter_content_lines(data_path):
            offset, ss_type, lemmas, definition, examples, pointers = _parse_data_line(
                data_path, line_no, byte_pos, line, file_pos
            )
            key = (file_pos, offset)
            if key in raw:
                raise MalformedLine(str(data_path), line_no, byte_pos, f"duplicate offset {offset}")
            raw[key] = (ss_type, lemmas, definition, examples, pointers, data_path, line_no)
            file_map[key] = SynsetId(ss_type, offset)

    synsets: dict[SynsetId, Synset] = {}
    dropped = 0
    for (file_pos, offset), (ss_type, lemmas, definition, examples, raw_pointers, data_path, line_no) in raw.items():
        resolved: list[Pointer] = []
        for symbol, target_pos, target_offset in raw_pointers:
            target_file = "a" if target_pos in ("a", "s") else target_pos
            if target_file not in pairs:
                dropped += 1
                continue
            target = file_map.get((target_file, target_offset))
            if target is None:
                raise DanglingPointer(
                    f"{data_path}:{line_no}: pointer {symbol} -> {target_pos}:{target_offset:08d}"
                    f" has no synset in data.{FILE_SUFFIX[target_file]}"
                )
            resolved.append(Pointer(PointerKind(symbol), target))
        sid = file_map[(file_pos, offset)]
        synsets[sid] = Synset(
            id=sid, lemmas=lemmas, gloss=definition, examples=examples, pointers=tuple(resolved)
        )
    if dropped:
        log.info("dropped %d pointer(s) into parts of speech that were not loaded", dropped)

    index: dict[tuple[str, str], tuple[SynsetId, ...]] = {}
    for file_pos, (index_path, _) in pairs.items():
        for line_no, byte_pos, line in _iter_content_lines(index_path):
            lemma, offsets = _parse_index_line(index_path, line_no, byte_pos, line, file_pos)
            ids = []
            for offset in offsets:
                sid = file_map.get((file_pos, offset))
                if sid is None:
                    raise DanglingPointer(
                        f"{index_path}:{line_no}: sense offset {offset:08d}"
                        f" not present in data.{FILE_SUFFIX[file_pos]}"
                    )
                ids.append(sid)
            entry = (lemma.lower(), file_pos)
            if entry in index:
                raise MalformedLine(str(index_path), line_no, byte_pos, f"duplicate index entry {lemma!r}")
            index[entry] = tuple(ids)

    db = build_database(synsets, index, release=_detect_release([p for p, _ in pairs.values()]))

    from .hierarchy import build_graph

    build_graph(db)  # raises CycleDetected on a cyclic hypernym relation
    return db
