import pytest

from toricsplit.graph import Graph, complete


def ten_gon() -> Graph:
    """A 10-cycle with three extra edges {1,5}, {2,6}, {6,8}."""
    pairs = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10),
             (1, 10), (1, 5), (2, 6), (6, 8)]
    return Graph.from_edges(10, [(u - 1, v - 1) for u, v in pairs])


def eps(g: Graph, i: int, j: int) -> int:
    """Index of the edge between 1-based vertices i and j."""
    idx = g.edge_index(i - 1, j - 1)
    assert idx is not None
    return idx


def labels(g: Graph, h: Graph) -> set[str]:
    return {g.label(i) for i in h.edge_ids}


@pytest.fixture
def tengon():
    return ten_gon()


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k5():
    return complete(5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
