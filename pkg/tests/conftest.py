import csv
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# criterion lines recorded by test_acceptance.py, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def load_appendix() -> dict[tuple[int, int], int]:
    """(k, n) -> count, loaded from the frozen fixture table."""
    with open(DATA / "appendix_table.csv", newline="") as fh:
        return {(int(r["k"]), int(r["n"])): int(r["count"]) for r in csv.DictReader(fh)}


@pytest.fixture(scope="session")
def appendix():
    return load_appendix()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
