import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semicayley.sweep import SweepConfig, run_sweep  # noqa: E402

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    _ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="session")
def sweep24():
    return run_sweep(SweepConfig(max_group_order=24))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
