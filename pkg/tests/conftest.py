import shutil
import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS))

CORPUS = TESTS / "corpus"
FIXTURES = TESTS / "fixtures"

_acceptance: list[tuple[str, str]] = []


def pytest_collection_modifyitems(config, items):
    if shutil.which("javac") and shutil.which("java"):
        return
    skip = pytest.mark.skip(reason="javac/java not on PATH")
    for item in items:
        if "jdk" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label = report.outcome.upper()
        _acceptance.append((label, report.nodeid.split("::")[-1]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, name in _acceptance:
        terminalreporter.write_line(f"{label:8s} {name}")


@pytest.fixture(scope="session")
def corpus_files():
    return sorted(CORPUS.glob("*.java"))
