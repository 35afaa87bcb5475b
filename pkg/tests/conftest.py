import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from intvert.polyhedron import Polyhedron  # noqa: E402

ACCEPTANCE = []


def record(number, ok, detail):
    ACCEPTANCE.append((number, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def square():
    return Polyhedron([[1, 0], [0, 1], [-1, 0], [0, -1]], [1, 1, 0, 0])


@pytest.fixture
def triangle():
    """2x1 + 2x2 <= 3, x >= 0: Delta = 2 and P_I != P."""
    return Polyhedron([[2, 2], [-1, 0], [0, -1]], [3, 0, 0])
