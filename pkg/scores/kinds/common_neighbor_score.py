# scores/kinds/common_neighbor_score.py

import numpy as np

from network.graph import WeightedGraph

from ..cluster_score import ClusterScore


class CommonNeighborScore:
    """
    Neighborhood-overlap score on simple graphs.

    mu1_i = 1 / (1 + |N_i|); mu2_ij = a_ij + (|N_i & N_j| - |N_i ^ N_j|) / |N_i | N_j|,
    open neighborhoods. Pairs with an empty neighborhood union get mu2_ij = a_ij.
    """

    id = "common-neighbor"
    description = "shared versus exclusive neighbors, simple graphs only"
    requires_simple = True

    def __init__(self, **params):
        self.params = params

    def build(self, graph: WeightedGraph) -> ClusterScore:
        graph.require_simple("common-neighbor score")
        adj = graph.adjacency()
        degrees = adj.sum(axis=1)
        mu1 = 1.0 / (1.0 + degrees)

        common = adj @ adj
        union = degrees[:, None] + degrees[None, :] - common
        exclusive = union - common
        ratio = np.divide(
            (common - exclusive).astype(float),
            union.astype(float),
            out=np.zeros(union.shape),
            where=union > 0,
        )
        mu2 = adj + ratio
        np.fill_diagonal(mu2, 0.0)
        return ClusterScore(mu1, mu2, label=self.id)
