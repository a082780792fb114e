# scores/kinds/cubic_triangle_score.py

import logging
from itertools import combinations

from network.graph import WeightedGraph

from ..config import DEFAULT_BETA
from ..cluster_score import ClusterScore
from .dual_weight_score import DualWeightScore

logger = logging.getLogger(__name__)


class CubicTriangleScore:
    """
    Dual-weight score plus a triple term: +beta on triangles, -beta on
    disconnected triples, 0 on connected non-complete triples.
    """

    id = "cubic-triangle"
    description = "dual-weight score with a triangle-rewarding cubic term"
    requires_simple = True

    def __init__(self, beta: float = DEFAULT_BETA, **params):
        if not 0.0 < beta <= 1.0:
            raise ValueError(f"beta must lie in (0, 1], got {beta}")
        self.beta = float(beta)
        self.params = params

    def build(self, graph: WeightedGraph) -> ClusterScore:
        graph.require_simple("cubic triangle score")
        base = DualWeightScore().build(graph)
        adj = graph.adjacency()

        mu3 = {}
        for i, j, k in combinations(range(graph.n), 3):
            edges = adj[i, j] + adj[i, k] + adj[j, k]
            if edges == 3:
                mu3[(i, j, k)] = self.beta
            elif edges < 2:
                mu3[(i, j, k)] = -self.beta
        logger.debug(f"[CubicTriangleScore] {len(mu3)} nonzero triples on {graph!r}")
        return ClusterScore(base.mu1, base.mu2, mu3, label=self.id, params={"beta": self.beta})
