"""Serialization of sequence sets and families, plus CSV table export.

The document format ("css-set/v1") is canonical JSON: sorted keys,
compact separators, one line.  Phases are stored as integers in
[0, q) and inserted nulls as JSON null, never as the number 0 (phase 0
is the unit entry, not silence).  A document holds either a single set
(structure "set", data = list of sequences) or a family (structure
"mocs", data = list of sets).

Parse errors are typed: MalformedDocumentError for broken JSON (with
line and column), TagMismatchError for a missing or wrong format tag,
and InvariantViolationError for structural violations (with a JSON
path locating the offense).
"""

from __future__ import annotations

import csv
import io
import json
from typing import List, Union

from .seqcore import NULL, ComplementarySet, MocsFamily, QarySequence

FORMAT_TAG = "css-set/v1"

_TOP_KEYS = {"format_tag", "q", "length", "structure", "data"}


class FileFormatError(ValueError):
    """Base class for document errors."""


class MalformedDocumentError(FileFormatError):
    """The text is not valid JSON."""

    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"malformed document: {msg} (line {line}, column {column})")
        self.line = line
        self.column = column


class TagMismatchError(FileFormatError):
    """The format tag is missing or names a different format."""

    def __init__(self, msg: str):
        super().__init__(f"tag mismatch: {msg}")


class InvariantViolationError(FileFormatError):
    """The document is well-formed JSON but violates a format invariant."""

    def __init__(self, msg: str, location: str):
        super().__init__(f"invariant violation: {msg} (at {location})")
        self.location = location


def _encode_sequence(seq: QarySequence) -> List:
    return [None if x == NULL else int(x) for x in seq.values]


def emit(obj: Union[ComplementarySet, MocsFamily]) -> str:
    """Canonical document text for a set or family; byte-deterministic."""
    if isinstance(obj, ComplementarySet):
        structure = "set"
        data = [_encode_sequence(s) for s in obj]
    elif isinstance(obj, MocsFamily):
        structure = "mocs"
        data = [[_encode_sequence(s) for s in cs] for cs in obj]
    else:
        raise TypeError(
            f"can only emit ComplementarySet or MocsFamily, got {type(obj).__name__}"
        )
    doc = {
        "format_tag": FORMAT_TAG,
        "q": obj.q,
        "length": obj.length,
        "structure": structure,
        "data": data,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _require_int(x, what: str, location: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvariantViolationError(f"{what} must be an integer", location)
    return x


def _decode_sequence(entries, q: int, length: int, location: str) -> QarySequence:
    if not isinstance(entries, list) or not entries:
        raise InvariantViolationError(
            "sequence must be a nonempty list", location
        )
    if len(entries) != length:
        raise InvariantViolationError(
            f"sequence has {len(entries)} entries, declared length is {length}",
            location,
        )
    values = []
    for i, x in enumerate(entries):
        if x is None:
            values.append(NULL)
            continue
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvariantViolationError(
                f"entry {x!r} is neither null nor an integer",
                f"{location}[{i}]",
            )
        if not 0 <= x < q:
            raise InvariantViolationError(
                f"phase {x} outside [0, {q})", f"{location}[{i}]"
            )
        values.append(x)
    return QarySequence(q, values)


def parse(text: str) -> Union[ComplementarySet, MocsFamily]:
    """Inverse of emit; parse(emit(x)) equals x structurally."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocumentError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict):
        raise InvariantViolationError("document must be an object", "$")
    tag = doc.get("format_tag")
    if tag is None:
        raise TagMismatchError("document has no format_tag")
    if tag != FORMAT_TAG:
        raise TagMismatchError(f"expected {FORMAT_TAG!r}, got {tag!r}")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise InvariantViolationError(
            f"unknown keys {sorted(unknown)}", "$"
        )
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise InvariantViolationError(
            f"missing keys {sorted(missing)}", "$"
        )
    q = _require_int(doc["q"], "q", "$.q")
    if q < 1:
        raise InvariantViolationError(f"q must be positive, got {q}", "$.q")
    length = _require_int(doc["length"], "length", "$.length")
    if length < 1:
        raise InvariantViolationError(
            f"length must be positive, got {length}", "$.length"
        )
    structure = doc["structure"]
    data = doc["data"]
    if not isinstance(data, list) or not data:
        raise InvariantViolationError("data must be a nonempty list", "$.data")
    if structure == "set":
        seqs = [
            _decode_sequence(entries, q, length, f"$.data[{i}]")
            for i, entries in enumerate(data)
        ]
        return ComplementarySet(seqs)
    if structure == "mocs":
        sets = []
        sizes = set()
        for i, group in enumerate(data):
            if not isinstance(group, list) or not group:
                raise InvariantViolationError(
                    "each family member must be a nonempty list of sequences",
                    f"$.data[{i}]",
                )
            sizes.add(len(group))
            sets.append(
                ComplementarySet(
                    [
                        _decode_sequence(entries, q, length, f"$.data[{i}][{j}]")
                        for j, entries in enumerate(group)
                    ]
                )
            )
        if len(sizes) > 1:
            raise InvariantViolationError(
                f"family members have differing sizes {sorted(sizes)}", "$.data"
            )
        return MocsFamily(sets)
    raise InvariantViolationError(
        f"structure must be 'set' or 'mocs', got {structure!r}", "$.structure"
    )


def csv_text(rows) -> str:
    """CSV with RFC-4180 quoting and newline terminators."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()
