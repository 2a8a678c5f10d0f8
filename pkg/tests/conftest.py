from __future__ import annotations

import pytest

from outerlabel.generators import gen_gl
from outerlabel.graph import Graph


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


K4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
K4_MINUS_E = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
K23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


@pytest.fixture
def g4() -> Graph:
    return gen_gl(4).graph


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
