"""Reader/writer for NIST LWC hash KAT files (``LWC_HASH_KAT_256.txt``)."""

from dataclasses import dataclass
from pathlib import Path

from ..errors import ParseError


@dataclass(frozen=True)
class KatVector:
    count: int
    msg: bytes
    md: bytes
    line: int = 0


def parse_kat(text, path=None):
    """Parse ``Count``/``Msg``/``MD`` records separated by blank lines."""
    vectors = []
    record = {}
    start = 0

    def flush():
        if not record:
            return
        missing = {"Count", "Msg", "MD"} - record.keys()
        if missing:
            raise ParseError(f"record missing {', '.join(sorted(missing))}", start, path)
        try:
            vectors.append(KatVector(
                int(record["Count"]),
                bytes.fromhex(record["Msg"]),
                bytes.fromhex(record["MD"]),
                start,
            ))
        except ValueError as exc:
            raise ParseError(f"bad value in record: {exc}", start, path) from None
        record.clear()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            flush()
            continue
        if line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected 'key = value', got {raw!r}", lineno, path)
        key = key.strip()
        if key not in ("Count", "Msg", "MD"):
            raise ParseError(f"unknown field {key!r}", lineno, path)
        if not record:
            start = lineno
        if key in record:
            raise ParseError(f"duplicate field {key!r} in record", lineno, path)
        record[key] = value.strip()
    flush()
    if not vectors:
        raise ParseError("no KAT vectors found", None, path)
    return vectors


def load_kat(path):
    path = Path(path)
    return parse_kat(path.read_text(), path=str(path))


def format_kat(vectors):
    out = []
    for v in vectors:
        out.append(f"Count = {v.count}\nMsg = {v.msg.hex().upper()}\nMD = {v.md.hex().upper()}\n\n")
    return "".join(out)


def check_kat(spec_id, vectors, hash_fn=None):
    """Return the list of vectors whose digest does not match."""
    if hash_fn is None:
        from . import hash as hash_fn
    return [v for v in vectors if hash_fn(spec_id, v.msg).bytes != v.md]
