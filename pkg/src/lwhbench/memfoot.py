"""RAM/ROM footprint from GNU linker maps and GCC ``.su`` stack files.

RAM = .data + .bss + worst-case stack, ROM = .text + .rodata. Heap is not
counted: the measured implementations never allocate dynamically.
"""

import csv
import io
import re
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from .errors import InvalidArgument, ParseError

PARSER_VERSION = "memfoot/1"
SEGMENTS = ("text", "rodata", "data", "bss")
CSV_HEADER = ("spec_id", "ram_bytes", "rom_bytes", "data", "bss", "stack", "text", "rodata")

POLICY_MAX = "max"
POLICY_CALLGRAPH = "callgraph"

_SECTION_RE = re.compile(r"^(\s*)\.(text|rodata|data|bss)(\.\S*)?(?:\s+(\S+)(?:\s+(\S+))?)?\s*(?:\S.*)?$")
_DISCARDED = "Discarded input sections"
_MEMCONFIG = "Memory Configuration"
_LINKER_MAP = "Linker script and memory map"


@dataclass(frozen=True)
class MapSegments:
    data_bytes: int = 0
    bss_bytes: int = 0
    text_bytes: int = 0
    rodata_bytes: int = 0

    def __post_init__(self):
        for name in ("data_bytes", "bss_bytes", "text_bytes", "rodata_bytes"):
            if getattr(self, name) < 0:
                raise InvalidArgument(f"{name} must be nonnegative")


@dataclass(frozen=True)
class StackEntry:
    location: str
    function: str
    bytes: int
    qualifier: str  # static, dynamic or bounded


@dataclass(frozen=True)
class StackUsage:
    entries: Tuple[StackEntry, ...] = ()
    worst_case_bytes: int = 0
    policy: str = POLICY_MAX


@dataclass(frozen=True)
class MemoryFootprint:
    ram_bytes: int
    rom_bytes: int
    segments: MapSegments
    stack_bytes: int
    stack_policy: str = POLICY_MAX
    provenance: List[str] = field(default_factory=list)


def parse_size(token, line_no=None, path=None):
    """Parse a size column: ``0x``-prefixed hex or plain decimal."""
    try:
        if token.lower().startswith("0x"):
            value = int(token, 16)
        else:
            value = int(token, 10)
    except ValueError:
        raise ParseError(f"malformed size field {token!r}", line=line_no, path=path) from None
    if value < 0:
        raise ParseError(f"negative size {token!r}", line=line_no, path=path)
    return value


def _looks_like_addr(token):
    return token is not None and token.lower().startswith("0x")


def parse_map(map_text, path=None):
    """Sum .text*/.rodata*/.data*/.bss* sizes from a GNU ld map.

    When the map has output-section headers (unindented ``.text 0x.. 0x..``)
    their sizes are used and the indented input-section lines underneath are
    skipped, so nothing is counted twice. Fixture-style maps made only of
    fragments are summed line by line. Long section names that push the
    address onto the following line are handled.
    """
    if not map_text or not map_text.strip():
        raise ParseError("empty map file", path=path)
    lines = map_text.splitlines()
    totals = {"output": defaultdict(int), "input": defaultdict(int)}
    seen_output = set()
    in_discarded = False
    pending = None  # (segment, indent, line_no) waiting for addr/size on next line

    for line_no, raw in enumerate(lines, 1):
        line = raw.rstrip()
        stripped = line.strip()
        if stripped.startswith(_DISCARDED):
            in_discarded = True
            continue
        if in_discarded and (stripped.startswith(_MEMCONFIG) or stripped.startswith(_LINKER_MAP)):
            in_discarded = False
        if in_discarded or not stripped:
            pending = None
            continue

        if pending is not None:
            seg, indent, first_line = pending
            pending = None
            toks = stripped.split()
            if len(toks) >= 2 and _looks_like_addr(toks[0]):
                size = parse_size(toks[1], line_no, path)
                kind = "input" if indent else "output"
                totals[kind][seg] += size
                if kind == "output":
                    seen_output.add(seg)
                continue

        m = _SECTION_RE.match(line)
        if not m:
            continue
        indent, seg, _sub, addr, size_tok = m.groups()
        if addr is None:
            pending = (seg, bool(indent), line_no)
            continue
        if not _looks_like_addr(addr):
            # e.g. ".text  ALIGN(2)" script lines or "*(.text)" patterns
            continue
        if size_tok is None:
            raise ParseError(f"section .{seg} has an address but no size", line=line_no, path=path)
        size = parse_size(size_tok, line_no, path)
        kind = "input" if indent else "output"
        totals[kind][seg] += size
        if kind == "output":
            seen_output.add(seg)

    result = {}
    for seg in SEGMENTS:
        result[seg] = totals["output"][seg] if seg in seen_output else totals["input"][seg]
    return MapSegments(
        data_bytes=result["data"],
        bss_bytes=result["bss"],
        text_bytes=result["text"],
        rodata_bytes=result["rodata"],
    )


_SU_RE = re.compile(r"^(?P<loc>.+?):(?P<line>\d+)(?::(?P<col>\d+))?:(?P<func>[^\t]+)\t(?P<bytes>\S+)\t(?P<qual>\S+)\s*$")
_QUALIFIERS = {"static": "static", "dynamic": "dynamic", "dynamic,bounded": "bounded", "bounded": "bounded"}


def parse_callgraph(text, path=None):
    """``caller callee`` edge list; ``#`` starts a comment."""
    edges = defaultdict(set)
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("call-graph lines must be 'caller callee'", line=line_no, path=path)
        edges[parts[0]].add(parts[1])
    return dict(edges)


def _deepest_path(frames, edges):
    memo = {}
    active = set()

    def depth(fn):
        if fn in memo:
            return memo[fn]
        if fn in active:
            raise ParseError(f"recursive call cycle through {fn!r}; stack depth is unbounded")
        active.add(fn)
        below = max((depth(c) for c in edges.get(fn, ())), default=0)
        active.discard(fn)
        memo[fn] = frames.get(fn, 0) + below
        return memo[fn]

    roots = set(frames) | set(edges)
    return max((depth(fn) for fn in sorted(roots)), default=0)


def parse_su(su_text, callgraph=None, path=None):
    """Parse ``file:line[:col]:function<TAB>bytes<TAB>qualifier`` lines.

    Without a call graph the worst case is the largest single frame; with
    one (mapping caller to callees, or edge-list text) it is the deepest
    call-path sum. Several ``.su`` files can be concatenated first.
    """
    entries = []
    for line_no, raw in enumerate(su_text.splitlines(), 1):
        if not raw.strip():
            continue
        m = _SU_RE.match(raw)
        if not m:
            raise ParseError(f"unrecognised .su line {raw!r}", line=line_no, path=path)
        qual = _QUALIFIERS.get(m["qual"])
        if qual is None:
            raise ParseError(f"unknown stack qualifier {m['qual']!r}", line=line_no, path=path)
        size = parse_size(m["bytes"], line_no, path)
        loc = f"{m['loc']}:{m['line']}" + (f":{m['col']}" if m["col"] else "")
        entries.append(StackEntry(loc, m["func"], size, qual))

    if callgraph is None:
        worst = max((e.bytes for e in entries), default=0)
        policy = POLICY_MAX
    else:
        if isinstance(callgraph, str):
            callgraph = parse_callgraph(callgraph)
        frames = {}
        for e in entries:
            # static functions of the same name in different files: keep the larger
            frames[e.function] = max(frames.get(e.function, 0), e.bytes)
        worst = _deepest_path(frames, callgraph)
        policy = POLICY_CALLGRAPH
    return StackUsage(tuple(entries), worst, policy)


def footprint(segments, stack, provenance=None):
    ram = segments.data_bytes + segments.bss_bytes + stack.worst_case_bytes
    rom = segments.text_bytes + segments.rodata_bytes
    prov = list(provenance or []) + [PARSER_VERSION]
    return MemoryFootprint(ram, rom, segments, stack.worst_case_bytes, stack.policy, prov)


def footprint_from_files(map_path, su_paths, callgraph_path=None):
    map_path = Path(map_path)
    segments = parse_map(map_path.read_text(), path=str(map_path))
    su_text = "\n".join(Path(p).read_text() for p in su_paths)
    cg = Path(callgraph_path).read_text() if callgraph_path else None
    stack = parse_su(su_text, callgraph=cg, path=",".join(str(p) for p in su_paths))
    prov = [str(map_path)] + [str(p) for p in su_paths]
    if callgraph_path:
        prov.append(str(callgraph_path))
    return footprint(segments, stack, prov)


def footprint_row(spec_id, fp):
    s = fp.segments
    return (spec_id, fp.ram_bytes, fp.rom_bytes, s.data_bytes, s.bss_bytes,
            fp.stack_bytes, s.text_bytes, s.rodata_bytes)


def footprints_to_csv(items):
    """``items`` is an iterable of (spec_id, MemoryFootprint)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for spec_id, fp in items:
        w.writerow(footprint_row(spec_id, fp))
    return buf.getvalue()


def footprints_from_csv(text):
    """Read back :func:`footprints_to_csv` output as (spec_id, MemoryFootprint) pairs."""
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ParseError(f"expected header {','.join(CSV_HEADER)}")
    out = []
    for row in reader:
        line = reader.line_num
        ints = {k: parse_size(row[k], line) for k in CSV_HEADER[1:]}
        seg = MapSegments(ints["data"], ints["bss"], ints["text"], ints["rodata"])
        fp = MemoryFootprint(ints["ram_bytes"], ints["rom_bytes"], seg, ints["stack"])
        if fp.ram_bytes != seg.data_bytes + seg.bss_bytes + fp.stack_bytes or \
                fp.rom_bytes != seg.text_bytes + seg.rodata_bytes:
            raise ParseError(f"row for {row['spec_id']} is inconsistent with RAM/ROM sums", line=line)
        out.append((row["spec_id"], fp))
    return out


def to_record(spec_id, fp, source=None):
    from .records import MeasurementRecord, Source
    return MeasurementRecord(spec_id, ram_bytes=fp.ram_bytes, rom_bytes=fp.rom_bytes,
                             source=source or Source.MEASURED)
