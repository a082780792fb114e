# conftest.py
import numpy as np
import pytest

from network import NodeSet, Partition, WeightedGraph, half_regular


def halves(n):
    """The two complete halves N1, N2 of half_regular(n)."""
    return Partition([range(n // 2), range(n // 2, n)])


def matched_pairs(n):
    """The perfect matching of half_regular(n) as a partition."""
    return Partition([(k, k + n // 2) for k in range(n // 2)])


def random_simple_graph(n, p, seed):
    """G(n, p) with a fixed seed; an edgeless draw gets the edge (0, 1) so modularity stays defined."""
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return WeightedGraph.from_edges(n, edges or [(0, 1)])


@pytest.fixture
def hr6():
    return half_regular(6)


@pytest.fixture
def hr8():
    return half_regular(8)


@pytest.fixture
def k3():
    return WeightedGraph.complete(3)


@pytest.fixture
def overlapping_triangles():
    return WeightedGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def n1_n2():
    return NodeSet(range(3)), NodeSet(range(3, 6))
