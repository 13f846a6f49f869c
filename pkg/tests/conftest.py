import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_log import RESULTS  # noqa: E402
from homcsa.search import SearchConfig, search  # noqa: E402


@pytest.fixture(scope="session")
def corpus2():
    """Every dim-2 hom-CSA with coefficients in {-1, 0, 1}, in search order."""
    return [f.instance for f in search(SearchConfig(2, (-1, 0, 1), target="hom-csa"))]


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        passed, detail = RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
