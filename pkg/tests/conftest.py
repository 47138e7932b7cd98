from pathlib import Path

import hypothesis
import pytest

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("dev", max_examples=50, deadline=None)
hypothesis.settings.load_profile("dev")

ROOT = Path(__file__).resolve().parents[1]
FIX1 = Path(__file__).parent / "fixtures" / "fix1"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fix1_dir():
    return FIX1


@pytest.fixture
def acceptance():
    def record(number, name, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} {detail}".rstrip())
        assert ok, f"criterion {number} ({name}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
