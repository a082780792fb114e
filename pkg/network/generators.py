# network/generators.py

"""
Benchmark graph generators: the half-regular worst-case family, partition-like
graphs (disjoint cliques), their noisy versions and unions of cliques.
"""

import logging
from collections import Counter
from itertools import combinations
from typing import Dict, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidPartitionError
from .graph import WeightedGraph
from .nodeset import NodeSet
from .partition import Partition
from .rng import make_rng

logger = logging.getLogger(__name__)


class CliqueUnion(NamedTuple):
    graph: WeightedGraph
    clique_type: Dict[int, int]


def half_regular(n: int) -> WeightedGraph:
    """
    Two complete halves N1 = {0..n/2-1}, N2 = {n/2..n-1} joined by the
    perfect matching k <-> k + n/2. Every degree is n/2, |E| = n^2/4.
    """
    if n % 2 or n <= 4:
        raise ValueError(f"half_regular needs an even n > 4, got {n}")
    half = n // 2
    edges = list(combinations(range(half), 2))
    edges += list(combinations(range(half, n), 2))
    edges += [(k, k + half) for k in range(half)]
    return WeightedGraph.from_edges(n, edges)


def _as_partition(blocks) -> Partition:
    if isinstance(blocks, Partition):
        return blocks
    return Partition(blocks)


def partition_graph(blocks, n: int) -> WeightedGraph:
    """G_P: complete graph on every block, nothing across blocks."""
    partition = _as_partition(blocks)
    if partition.n != n:
        raise InvalidPartitionError(f"partition covers {partition.n} nodes, expected {n}")
    edges = [pair for block in partition for pair in combinations(block, 2)]
    return WeightedGraph.from_edges(n, edges)


def noisy_partition_graph(blocks, p_add: float, p_del: float, seed: int) -> WeightedGraph:
    """
    partition_graph with independent coin flips: each non-edge is added with
    probability p_add, each edge removed with probability p_del.
    """
    for name, p in (("p_add", p_add), ("p_del", p_del)):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {p}")
    partition = _as_partition(blocks)
    n = partition.n
    base = partition_graph(partition, n).matrix

    rng = make_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    coins = rng.random(len(rows))
    present = base[rows, cols] > 0
    keep = np.where(present, coins >= p_del, coins < p_add)

    edges = [(int(i), int(j)) for i, j in zip(rows[keep], cols[keep])]
    graph = WeightedGraph.from_edges(n, edges)
    logger.debug(
        f"[Generators] noisy partition graph seed={seed}: "
        f"{int(present.sum())} planted edges -> {graph.edge_count} edges"
    )
    return graph


def clique_union(cliques: Sequence[Iterable[int]]) -> CliqueUnion:
    """
    G = K_{A_1} u ... u K_{A_k}, plus the clique type: how many of the
    supplied cliques are inclusion-maximal among them, by size.
    """
    cliques = [c if isinstance(c, NodeSet) else NodeSet(c) for c in cliques]
    if not cliques:
        raise ValueError("clique_union needs at least one clique")
    if any(not c for c in cliques):
        raise ValueError("cliques must be nonempty")
    covered = NodeSet()
    for c in cliques:
        covered = covered | c
    n = len(covered)
    if covered != NodeSet.full(n):
        raise ValueError(f"cliques must cover 0..{n - 1}")

    edges = {pair for c in cliques for pair in combinations(c, 2)}
    graph = WeightedGraph.from_edges(n, edges)

    distinct = set(cliques)
    maximal = [c for c in distinct if not any(c < other for other in distinct)]
    clique_type = dict(sorted(Counter(len(c) for c in maximal).items()))
    return CliqueUnion(graph, clique_type)
