"""The embedded 24-function reference table and CSV record I/O."""

import csv
import io
import os
from importlib import resources
from pathlib import Path

from ..errors import ParseError
from ..records import MeasurementRecord, Source

ENV_VAR = "LWHBENCH_TABLE2"
TABLE2_COLUMNS = ("spec_id", "cpb", "ram", "rom", "energy_nj", "erank")

# accepted spellings per field in user measurement files
_ALIASES = {
    "cpb": ("cpb", "cpb_median"),
    "ram_bytes": ("ram_bytes", "ram"),
    "rom_bytes": ("rom_bytes", "rom"),
    "energy_nj": ("energy_nj",),
}


def table2_text():
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override).read_text()
    return resources.files("lwhbench.metrics").joinpath("data/table2.csv").read_text()


def _num(text, cast, line, path, field):
    if text is None or text.strip() == "":
        return None
    try:
        return cast(text)
    except ValueError:
        try:
            as_float = float(text)
        except ValueError:
            raise ParseError(f"{field}: not a number: {text!r}", line=line, path=path) from None
        if cast is int and as_float.is_integer():
            return int(as_float)
        raise ParseError(f"{field}: expected an integer, got {text!r}", line=line, path=path) from None


def records_from_csv(text, source=Source.MEASURED, path=None):
    """Parse measurement rows. Missing columns or blank cells become None."""
    reader = csv.DictReader(io.StringIO(text))
    header = [h.strip() for h in (reader.fieldnames or [])]
    if "spec_id" not in header:
        raise ParseError("measurement CSV needs a spec_id column", line=1, path=path)
    reader.fieldnames = header
    records = []
    for row in reader:
        line = reader.line_num
        values = {}
        for field, names in _ALIASES.items():
            col = next((n for n in names if n in header), None)
            cast = float if field in ("cpb", "energy_nj") else int
            values[field] = _num(row.get(col), cast, line, path, field) if col else None
        src = source
        if row.get("source"):
            try:
                src = Source(row["source"])
            except ValueError:
                pass  # profiler CSVs carry a counter kind there, not a record source
        records.append(MeasurementRecord(row["spec_id"].strip(), source=src, **values))
    return records


def load_table2():
    """Reference records plus the published E-RANK column, keyed by spec id."""
    text = table2_text()
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != TABLE2_COLUMNS:
        raise ParseError(f"table2 header must be {','.join(TABLE2_COLUMNS)}")
    records = records_from_csv(text, Source.PAPER_TABLE2)
    published = {}
    for row in csv.DictReader(io.StringIO(text)):
        published[row["spec_id"]] = float(row["erank"])
    return records, published


def paper_records():
    return load_table2()[0]


def published_erank():
    return load_table2()[1]
