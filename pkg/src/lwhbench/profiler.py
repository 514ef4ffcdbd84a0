"""Cycles-per-byte measurement over pluggable cycle counters.

The counter contract follows the on-target timer: it is reset to zero right
before the hash call and read right after, and the reading is divided by the
number of message bytes. Host runs report median and median absolute
deviation over the repetitions.
"""

import csv
import io
import itertools
import statistics
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import List

from . import hashkit
from .errors import InvalidArgument, NotImplementedSpec
from .records import MeasurementRecord, Source

DEFAULT_MESSAGE_LEN = 128
DEFAULT_REPETITIONS = 32

CSV_HEADER = ("spec_id", "message_len", "repetitions", "cpb_median", "cpb_mad", "source")


class SourceKind(str, Enum):
    HOST_COUNTER = "host-counter"
    MONOTONIC_CLOCK_SCALED = "monotonic"
    SCRIPTED = "scripted"


class CycleSource:
    """Start/stop cycle counter.

    ``HOST_COUNTER`` reads ``perf_counter_ns`` and ``MONOTONIC_CLOCK_SCALED``
    reads ``monotonic_ns``; both convert elapsed nanoseconds to cycles at
    ``frequency_hz``. ``SCRIPTED`` ignores time and replays ``script``
    (cycling when exhausted), which makes measurements reproducible.
    """

    def __init__(self, kind=SourceKind.HOST_COUNTER, frequency_hz=1e9, script=None):
        self.kind = SourceKind(kind)
        if not frequency_hz > 0:
            raise InvalidArgument("frequency_hz must be positive")
        self.frequency_hz = float(frequency_hz)
        if self.kind is SourceKind.SCRIPTED:
            if not script:
                raise InvalidArgument("a scripted source needs at least one cycle count")
            if any(int(c) != c or c < 0 for c in script):
                raise InvalidArgument("scripted cycle counts must be nonnegative integers")
            self.script = tuple(int(c) for c in script)
        else:
            self.script = None
        self.reset()

    @classmethod
    def scripted(cls, cycles):
        if isinstance(cycles, int):
            cycles = [cycles]
        return cls(SourceKind.SCRIPTED, script=cycles)

    def reset(self):
        self._replay = itertools.cycle(self.script) if self.script else None
        self._t0 = None

    def _now_ns(self):
        if self.kind is SourceKind.HOST_COUNTER:
            return time.perf_counter_ns()
        return time.monotonic_ns()

    def start(self):
        if self.kind is not SourceKind.SCRIPTED:
            self._t0 = self._now_ns()

    def stop(self):
        if self.kind is SourceKind.SCRIPTED:
            return next(self._replay)
        if self._t0 is None:
            raise RuntimeError("stop() without start()")
        elapsed = self._now_ns() - self._t0
        self._t0 = None
        return int(round(elapsed * self.frequency_hz / 1e9))


@dataclass(frozen=True)
class CpbResult:
    spec_id: str
    message_len_bytes: int
    repetitions: int
    cycles_per_rep: List[int] = field(default_factory=list)
    cpb_median: float = 0.0
    cpb_mad: float = 0.0
    source: str = SourceKind.HOST_COUNTER.value

    def to_record(self):
        return MeasurementRecord(self.spec_id, cpb=self.cpb_median, source=Source.MEASURED)


def summarize(spec_id, message_len_bytes, cycles, source_label):
    cycles = [int(c) for c in cycles]
    median = statistics.median(cycles)
    mad = statistics.median(abs(c - median) for c in cycles)
    return CpbResult(
        spec_id=spec_id,
        message_len_bytes=message_len_bytes,
        repetitions=len(cycles),
        cycles_per_rep=cycles,
        cpb_median=median / message_len_bytes,
        cpb_mad=mad / message_len_bytes,
        source=source_label,
    )


def bench_message(n):
    return bytes(i & 0xFF for i in range(n))


def measure_cpb(spec_id, message_len_bytes=DEFAULT_MESSAGE_LEN,
                repetitions=DEFAULT_REPETITIONS, source=None):
    if message_len_bytes < 1:
        raise InvalidArgument("message_len_bytes must be at least 1 (CpB is undefined for empty input)")
    if repetitions < 1:
        raise InvalidArgument("repetitions must be at least 1")
    spec = hashkit.get_spec(spec_id)
    if not spec.implemented:
        raise NotImplementedSpec(f"{spec.name} is registry-only; cannot run it on the host")
    if source is None:
        source = CycleSource()
    source.reset()
    msg = bench_message(message_len_bytes)
    hash_fn = hashkit.hash
    hash_fn(spec.id, msg)  # untimed warm-up
    cycles = []
    for _ in range(repetitions):
        source.start()
        hash_fn(spec.id, msg)
        cycles.append(source.stop())
    return summarize(spec.id, message_len_bytes, cycles, source.kind.value)


def ingest_external_cpb(spec_id, cpb_value):
    """Wrap a CpB measured elsewhere (e.g. on the AVR target) as a record fragment."""
    try:
        ok = cpb_value > 0
    except TypeError:
        ok = False
    if not ok:
        raise InvalidArgument(f"external CpB must be positive, got {cpb_value!r}")
    return MeasurementRecord(hashkit.canonical_id(spec_id), cpb=cpb_value, source=Source.EXTERNAL)


def fmt(x):
    return format(x, ".6g")


def results_to_csv(results):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in results:
        w.writerow([r.spec_id, r.message_len_bytes, r.repetitions,
                    fmt(r.cpb_median), fmt(r.cpb_mad), r.source])
    return buf.getvalue()
