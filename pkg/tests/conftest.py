"""Shared test fixtures."""

import itertools
import sys
from pathlib import Path

import pytest

# Ensure the project root is on the path
project_root = Path(__file__).resolve().parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from core.models import Graph  # noqa: E402


@pytest.fixture
def k1():
    return Graph(1)


@pytest.fixture
def k2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def k3():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def k4():
    return Graph.from_edges(4, itertools.combinations(range(4), 2))


@pytest.fixture
def triangle_with_pendant():
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@pytest.fixture
def spider():
    """Three legs of length 2 around centre 0."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.edges"
    path.write_text("# four-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n")
    return path
