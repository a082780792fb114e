# scores/kinds/modularity_score.py

import logging

import numpy as np

from network.graph import WeightedGraph

from ..cluster_score import ClusterScore

logger = logging.getLogger(__name__)


class ModularityScore:
    """
    Weighted modularity as a quadratic cluster score.

    mu1_i = -(w_i / 2w_N)^2 and mu2_ij = (w_ij - w_i w_j / 2w_N) / w_N, so that
    the partition function sum_A v(A) is the modularity Q(P).
    """

    id = "modularity"
    description = "Newman-Girvan modularity, weighted form"
    requires_simple = False

    def __init__(self, **params):
        self.params = params

    def build(self, graph: WeightedGraph) -> ClusterScore:
        total = graph.total_weight
        if total <= 0:
            raise ValueError("modularity is undefined on a graph with zero total weight")
        strengths = graph.strengths
        mu1 = -((strengths / (2.0 * total)) ** 2)
        mu2 = (graph.matrix - np.outer(strengths, strengths) / (2.0 * total)) / total
        np.fill_diagonal(mu2, 0.0)
        logger.debug(f"[ModularityScore] built on {graph!r}, w_N={total}")
        return ClusterScore(mu1, mu2, label=self.id)
