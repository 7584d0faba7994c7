import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from strongquot.corpus import corpus_rings  # noqa: E402


@pytest.fixture(scope="session")
def small_corpus():
    """Corpus rings with at most 16 elements."""
    return corpus_rings(16)


@pytest.fixture(scope="session")
def full_corpus():
    return corpus_rings()


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
