# network/graph.py

import logging
from itertools import combinations
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .config import WEIGHT_TOLERANCE
from .errors import NotSimpleGraphError
from .nodeset import NodeSet
from .partition import Partition

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def canonical_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


class WeightedGraph:
    """
    Undirected graph on nodes 0..n-1 with symmetric weights in [0, 1].

    Absent pairs have weight 0. The instance is immutable: the dense weight
    matrix is exposed read-only and every derived statistic is computed once.

    Args:
        n: Number of nodes.
        weights: Map from node pair to weight. Pairs may be given in either
            order; zero weights are accepted and simply not stored.
    """

    def __init__(self, n: int, weights: Optional[Mapping[Pair, float]] = None):
        if n < 0:
            raise ValueError(f"node count must be non-negative, got {n}")
        self._n = int(n)
        matrix = np.zeros((self._n, self._n), dtype=float)
        stored: Dict[Pair, float] = {}

        for (i, j), w in (weights or {}).items():
            i, j, w = int(i), int(j), float(w)
            if i == j:
                raise ValueError(f"self-pair ({i}, {i}) is not allowed")
            if not (0 <= i < self._n and 0 <= j < self._n):
                raise ValueError(f"pair ({i}, {j}) outside 0..{self._n - 1}")
            if not (-WEIGHT_TOLERANCE <= w <= 1 + WEIGHT_TOLERANCE):
                raise ValueError(f"weight {w} of pair ({i}, {j}) outside [0, 1]")
            w = min(max(w, 0.0), 1.0)
            pair = canonical_pair(i, j)
            if pair in stored:
                raise ValueError(f"pair {pair} given twice")
            if w > 0:
                stored[pair] = w
                matrix[i, j] = matrix[j, i] = w

        matrix.setflags(write=False)
        self._matrix = matrix
        self._weights = MappingProxyType(stored)
        self._strengths = matrix.sum(axis=1)
        self._strengths.setflags(write=False)

    @classmethod
    def from_matrix(cls, matrix) -> "WeightedGraph":
        matrix = np.asarray(matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("weight matrix must be square")
        if not np.allclose(matrix, matrix.T):
            raise ValueError("weight matrix must be symmetric")
        if np.any(np.diag(matrix) != 0):
            raise ValueError("weight matrix must have a zero diagonal")
        rows, cols = np.nonzero(np.triu(matrix, k=1))
        return cls(matrix.shape[0], {(int(i), int(j)): matrix[i, j] for i, j in zip(rows, cols)})

    @classmethod
    def from_edges(cls, n: int, edges) -> "WeightedGraph":
        """Simple graph from an iterable of node pairs."""
        return cls(n, {canonical_pair(i, j): 1.0 for i, j in edges})

    @classmethod
    def empty(cls, n: int) -> "WeightedGraph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "WeightedGraph":
        return cls.from_edges(n, combinations(range(n), 2))

    # ------------------------------------------------------------------ basics

    @property
    def n(self) -> int:
        return self._n

    @property
    def weights(self) -> Mapping[Pair, float]:
        return self._weights

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def strengths(self) -> np.ndarray:
        return self._strengths

    @property
    def total_weight(self) -> float:
        return float(sum(self._weights.values()))

    @property
    def is_simple(self) -> bool:
        return all(w == 1.0 for w in self._weights.values())

    def weight(self, i: int, j: int) -> float:
        return float(self._matrix[i, j])

    def strength(self, i: int) -> float:
        return float(self._strengths[i])

    def edges(self) -> Iterator[Pair]:
        return iter(sorted(self._weights))

    @property
    def edge_count(self) -> int:
        return len(self._weights)

    def nodes(self) -> NodeSet:
        return NodeSet.full(self._n)

    def require_simple(self, operation: str) -> None:
        if not self.is_simple:
            raise NotSimpleGraphError(f"{operation} is defined for simple (0/1-weighted) graphs only")

    def adjacency(self) -> np.ndarray:
        """0/1 adjacency of the positive-weight pairs."""
        return (self._matrix > 0).astype(np.int64)

    def degree(self, i: int) -> int:
        return int(np.count_nonzero(self._matrix[i]))

    def degrees(self) -> np.ndarray:
        return np.count_nonzero(self._matrix, axis=1)

    def group_degree(self, A: NodeSet) -> float:
        """d_A: sum of member strengths (degrees on simple graphs)."""
        idx = self._indices(A)
        return float(self._strengths[idx].sum())

    # ---------------------------------------------------------------- queries

    def spanned_edge_weight(self, A: NodeSet) -> float:
        """Total weight of pairs inside A; |E(A)| on simple graphs."""
        idx = self._indices(A)
        if len(idx) < 2:
            return 0.0
        return float(self._matrix[np.ix_(idx, idx)].sum() / 2.0)

    def neighborhood(self, i: int) -> NodeSet:
        """Open neighborhood N_i of a node in a simple graph."""
        self.require_simple("neighborhood")
        if not 0 <= i < self._n:
            raise ValueError(f"node {i} outside 0..{self._n - 1}")
        return NodeSet(int(j) for j in np.flatnonzero(self._matrix[i]))

    def triangle_count(self) -> int:
        adj = self.adjacency()
        return int(np.trace(adj @ adj @ adj) // 6)

    def clustering_coefficient(self) -> float:
        """3 x triangles / connected triples."""
        self.require_simple("clustering_coefficient")
        degrees = self.degrees()
        triples = int((degrees * (degrees - 1) // 2).sum())
        if triples == 0:
            raise ValueError("clustering coefficient undefined: graph has no connected triple")
        return 3.0 * self.triangle_count() / triples

    def induced_edge_count(self, A: NodeSet) -> int:
        idx = self._indices(A)
        return int(np.count_nonzero(self._matrix[np.ix_(idx, idx)]) // 2)

    def is_connected_subset(self, A: NodeSet) -> bool:
        idx = self._indices(A)
        if len(idx) <= 1:
            return True
        sub = csr_matrix(self._matrix[np.ix_(idx, idx)] > 0)
        count, _ = connected_components(sub, directed=False)
        return count == 1

    def connected_components(self):
        """Components of the positive-weight graph as a Partition."""
        if self._n == 0:
            return Partition([])
        count, labels = connected_components(csr_matrix(self._matrix > 0), directed=False)
        logger.debug(f"[WeightedGraph] {count} connected components on {self._n} nodes")
        return Partition.from_labels(labels.tolist())

    # ------------------------------------------------------------------ dunder

    def _indices(self, A) -> np.ndarray:
        A = A if isinstance(A, NodeSet) else NodeSet(A)
        A.check_range(self._n)
        return np.fromiter(A, dtype=np.int64, count=len(A))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._n == other._n and dict(self._weights) == dict(other._weights)

    def __hash__(self) -> int:
        return hash((self._n, tuple(sorted(self._weights.items()))))

    def __repr__(self) -> str:
        kind = "simple" if self.is_simple else "weighted"
        return f"WeightedGraph(n={self._n}, edges={self.edge_count}, {kind})"
