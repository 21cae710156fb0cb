from __future__ import annotations

from pathlib import Path

import pytest

from thcover import Graph, VertexOrdering, parse_graph, parse_ordering

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def seven() -> Graph:
    """Seven-vertex worked example: coverable, needs a good ordering."""
    return parse_graph((DATA / "sample7.txt").read_text())


@pytest.fixture(scope="session")
def good_order(seven) -> VertexOrdering:
    """An ordering under which the coloring alone already yields a cover."""
    return parse_ordering((DATA / "good.ord").read_text(), seven.n)


@pytest.fixture(scope="session")
def paraglider() -> Graph:
    """The five-vertex graph whose cover needs the recoloring phase."""
    return Graph.from_edges(5, [(0, 1), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


@pytest.fixture(scope="session")
def c5() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
