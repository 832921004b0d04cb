import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        for _, text in report.sections:
            _acceptance_lines.extend(l for l in text.splitlines() if l.startswith("criterion"))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
