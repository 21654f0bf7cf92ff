"""Exception types shared across the toolkit.

Every error carries a short machine-readable ``code`` used by the CLI and
the HTTP service when rendering ``{"error": {"code", "message"}}`` bodies.
"""

from __future__ import annotations


class LexispecError(Exception):
    """Base class for all toolkit errors."""

    code = "error"


class MissingFile(LexispecError):
    code = "missing_file"


class MalformedLine(LexispecError):
    """A database or fixture line that cannot be parsed."""

    code = "malformed_line"

    def __init__(self, path: str, line_no: int, byte_pos: int, reason: str):
        super().__init__(f"{path}:{line_no} (byte {byte_pos}): {reason}")
        self.path = path
        self.line_no = line_no
        self.byte_pos = byte_pos
        self.reason = reason


class DanglingPointer(LexispecError):
    code = "dangling_pointer"


class CycleDetected(LexispecError):
    """The hypernym relation is cyclic; ``cycle`` lists one witness."""

    code = "cycle_detected"

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("hypernym cycle: " + " -> ".join(str(s) for s in self.cycle))


class InvalidSenseKey(LexispecError):
    code = "invalid_sense_key"


class UnknownLemma(LexispecError):
    code = "unknown_lemma"


class SenseOutOfRange(LexispecError):
    code = "sense_out_of_range"


class UnknownSynset(LexispecError):
    code = "unknown_synset"


class MalformedRecord(LexispecError):
    code = "malformed_record"

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"record at line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class DuplicateRecordId(LexispecError):
    code = "duplicate_record_id"


class InsufficientData(LexispecError):
    code = "insufficient_data"


class UndefinedAlpha(LexispecError):
    code = "undefined_alpha"


class StoreCorrupt(LexispecError):
    code = "store_corrupt"


class AddressInUse(LexispecError):
    code = "address_in_use"


class RecordNotFound(LexispecError):
    code = "record_not_found"


class DuplicateEvent(LexispecError):
    code = "duplicate_event"


class BadRequest(LexispecError):
    code = "bad_request"
