"""Measurement record shared by the profiler, memory, energy and metric code."""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from .errors import InvalidArgument

FIELDS = ("cpb", "ram_bytes", "rom_bytes", "energy_nj")


class Source(str, Enum):
    PAPER_TABLE2 = "PaperTable2"
    MEASURED = "Measured"
    EXTERNAL = "External"


@dataclass(frozen=True)
class MeasurementRecord:
    """One hash function's (cpb, ram, rom, energy) tuple.

    Any field may be ``None`` while a record is being assembled from
    separate tools; metric code calls :meth:`require_complete` first.
    """

    spec_id: str
    cpb: Optional[float] = None
    ram_bytes: Optional[int] = None
    rom_bytes: Optional[int] = None
    energy_nj: Optional[float] = None
    source: Source = Source.MEASURED

    def require_complete(self):
        for name in FIELDS:
            value = getattr(self, name)
            if value is None:
                raise InvalidArgument(f"{self.spec_id}: {name} is missing")
            if not value > 0:
                raise InvalidArgument(f"{self.spec_id}: {name} must be positive, got {value}")
        return self

    def merged(self, other):
        """Fill this record's missing fields from ``other`` (same spec id)."""
        if other.spec_id != self.spec_id:
            raise InvalidArgument(f"cannot merge {other.spec_id} into {self.spec_id}")
        updates = {
            name: getattr(other, name)
            for name in FIELDS
            if getattr(self, name) is None and getattr(other, name) is not None
        }
        return replace(self, **updates)
