# scores/kinds/dual_weight_score.py

import logging
from math import comb

import numpy as np

from network.graph import WeightedGraph
from network.nodeset import NodeSet

from ..cluster_score import ClusterScore

logger = logging.getLogger(__name__)


class DualWeightScore:
    """
    Quadratic score balancing edge weights against their complements.

    mu1_i = (n-1-w_i) / 2(n-1) and mu2_ij = w_ij - (1 - (w_i + w_j) / 2(n-1)).
    Complete graphs are best left whole, empty graphs best left as singletons,
    and a partition-like graph is best split along its components.
    """

    id = "dual-weight"
    description = "dual-weight score: edges reward, non-edges penalize, degree-corrected"
    requires_simple = False

    def __init__(self, **params):
        self.params = params

    def build(self, graph: WeightedGraph) -> ClusterScore:
        n = graph.n
        if n < 2:
            raise ValueError(f"dual-weight score needs at least 2 nodes, got {n}")
        strengths = graph.strengths
        mu1 = (n - 1 - strengths) / (2.0 * (n - 1))
        mu2 = graph.matrix - (1.0 - (strengths[:, None] + strengths[None, :]) / (2.0 * (n - 1)))
        np.fill_diagonal(mu2, 0.0)
        return ClusterScore(mu1, mu2, label=self.id)


def dual_weight_closed_form(graph: WeightedGraph, A: NodeSet) -> float:
    """|A|/2 + d_A(|A|-2)/2(n-1) - (C(|A|,2) - |E(A)|) on simple graphs."""
    graph.require_simple("dual_weight_closed_form")
    size = len(A)
    if size == 0:
        return 0.0
    n = graph.n
    missing = comb(size, 2) - graph.induced_edge_count(A)
    return size / 2.0 + graph.group_degree(A) * (size - 2) / (2.0 * (n - 1)) - missing


def complete_component_value(size: int, n: int, beta: float = 0.0) -> float:
    """Score of a block that is a whole complete component of an n-node graph."""
    return size / 2.0 + comb(size, 2) * (size - 2) / (n - 1) + beta * comb(size, 3)


def partition_like_optimum(blocks, n: int, beta: float = 0.0) -> float:
    """Optimal value on the partition-like graph of the given blocks."""
    return float(sum(complete_component_value(len(b), n, beta) for b in blocks))
