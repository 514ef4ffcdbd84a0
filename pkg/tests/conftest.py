import os
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
KAT_FILE = "LWC_HASH_KAT_256.txt"


def kat_path(spec_id):
    """Bundled KAT file for ``spec_id``, or one under $LWHBENCH_KAT_DIR."""
    candidates = [DATA / "kat" / spec_id / KAT_FILE]
    extra = os.environ.get("LWHBENCH_KAT_DIR")
    if extra:
        candidates.insert(0, Path(extra) / spec_id / KAT_FILE)
    for c in candidates:
        if c.is_file():
            return c
    return None


@pytest.fixture
def data_dir():
    return DATA


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
