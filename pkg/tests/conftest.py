import json
from pathlib import Path

import pytest

from brext.config import data_path, load_system

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def trivial():
    return load_system(data_path("trivial"))


@pytest.fixture(scope="session")
def c2c2():
    return load_system(data_path("c2c2"))


@pytest.fixture(scope="session")
def c2c2_obj():
    return json.loads(data_path("c2c2").read_text())


def fault_files():
    """All fault-injected configs with their expected violation fragment."""
    manifest = json.loads((FIXTURES / "faults" / "manifest.json").read_text())
    return [(FIXTURES / "faults" / name, frag) for name, frag in manifest.items()]


# Verdict lines recorded by the acceptance module; printed after the run so
# they survive output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
