# scores/cluster_score.py

import logging
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Tuple, Union

import numpy as np

from network.errors import CapExceededError, UnsupportedCaseError
from network.nodeset import NodeSet
from network.partition import Partition

from .config import SUBSET_TABLE_CHUNK, SUBSET_TABLE_MAX_NODES

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


class ClusterScore:
    """
    Cluster score v given by its Moebius coefficients up to triples.

    v(A) = sum of mu1 over members + mu2 over member pairs + mu3 over member
    triples; v(empty) = 0. Pair coefficients live in a dense symmetric matrix
    with zero diagonal, triple coefficients in a sparse map keyed by sorted
    triples. Instances are immutable.

    Args:
        mu1: Singleton coefficients, length n.
        mu2: Pair coefficients, either an n x n symmetric array or a map from
            node pairs (any order) to values. Missing pairs are 0.
        mu3: Optional map from node triples to values. Missing triples are 0.
        label: Score-kind tag carried into outputs.
        params: Kind-specific parameters (e.g. beta), informational only.
    """

    def __init__(
        self,
        mu1,
        mu2: Union[np.ndarray, Mapping[Tuple[int, int], float], None] = None,
        mu3: Optional[Mapping[Triple, float]] = None,
        label: str = "custom",
        params: Optional[Dict[str, float]] = None,
    ):
        mu1 = np.array(mu1, dtype=float)
        if mu1.ndim != 1:
            raise ValueError("mu1 must be a vector")
        n = len(mu1)

        if mu2 is None:
            matrix = np.zeros((n, n))
        elif isinstance(mu2, Mapping):
            matrix = np.zeros((n, n))
            for (i, j), value in mu2.items():
                if i == j:
                    raise ValueError(f"pair coefficient on ({i}, {i}) is not a pair")
                matrix[i, j] = matrix[j, i] = float(value)
        else:
            matrix = np.array(mu2, dtype=float)
            if matrix.shape != (n, n):
                raise ValueError(f"mu2 must be {n}x{n}, got {matrix.shape}")
            if not np.allclose(matrix, matrix.T, atol=0.0, rtol=0.0):
                raise ValueError("mu2 must be symmetric")
            np.fill_diagonal(matrix, 0.0)

        triples: Dict[Triple, float] = {}
        for key, value in (mu3 or {}).items():
            key = tuple(sorted(int(k) for k in key))
            if len(set(key)) != 3 or not all(0 <= k < n for k in key):
                raise ValueError(f"invalid triple {key} for n={n}")
            if key in triples:
                raise ValueError(f"triple {key} given twice")
            if value != 0.0:
                triples[key] = float(value)

        mu1.setflags(write=False)
        matrix.setflags(write=False)
        self._n = n
        self._mu1 = mu1
        self._mu2 = matrix
        self._mu3 = MappingProxyType(dict(sorted(triples.items())))
        self._tri_idx = np.array(list(self._mu3), dtype=np.int64).reshape(-1, 3)
        self._tri_val = np.array(list(self._mu3.values()), dtype=float)
        self.label = label
        self.params = dict(params or {})

    # -------------------------------------------------------------- accessors

    @property
    def n(self) -> int:
        return self._n

    @property
    def mu1(self) -> np.ndarray:
        return self._mu1

    @property
    def mu2(self) -> np.ndarray:
        return self._mu2

    @property
    def mu3(self) -> Mapping[Triple, float]:
        return self._mu3

    @property
    def degree(self) -> int:
        if self._mu3:
            return 3
        if np.any(self._mu2 != 0):
            return 2
        return 1 if np.any(self._mu1 != 0) else 0

    @property
    def is_quadratic(self) -> bool:
        return not self._mu3

    def pair(self, i: int, j: int) -> float:
        return float(self._mu2[i, j])

    def triple(self, i: int, j: int, k: int) -> float:
        return self._mu3.get(tuple(sorted((i, j, k))), 0.0)

    def pair_coefficients(self) -> Dict[Tuple[int, int], float]:
        """Sparse view of the nonzero pair coefficients."""
        rows, cols = np.nonzero(np.triu(self._mu2, k=1))
        return {(int(i), int(j)): float(self._mu2[i, j]) for i, j in zip(rows, cols)}

    def coefficient(self, A: NodeSet) -> float:
        """mu^v(A) for any subset (0 above the stored degree)."""
        members = tuple(A)
        if len(members) == 1:
            return float(self._mu1[members[0]])
        if len(members) == 2:
            return self.pair(*members)
        if len(members) == 3:
            return self._mu3.get(members, 0.0)
        return 0.0

    # ------------------------------------------------------------- evaluation

    def _indices(self, A) -> np.ndarray:
        A = A if isinstance(A, NodeSet) else NodeSet(A)
        A.check_range(self._n)
        return np.fromiter(A, dtype=np.int64, count=len(A))

    def restricted_polynomial(self, idx: np.ndarray, x: np.ndarray) -> float:
        """
        f^v at the point that equals x on idx and 0 elsewhere.

        This is the multilinear extension restricted to a member set; every
        support subset of a cover is evaluated through here.
        """
        if len(idx) == 0:
            return 0.0
        value = float(self._mu1[idx] @ x)
        if len(idx) > 1:
            value += 0.5 * float(x @ self._mu2[np.ix_(idx, idx)] @ x)
        if len(idx) > 2 and len(self._tri_val):
            full = np.zeros(self._n)
            full[idx] = x
            t = self._tri_idx
            value += float(self._tri_val @ (full[t[:, 0]] * full[t[:, 1]] * full[t[:, 2]]))
        return value

    def conditional_scores(self, idx: np.ndarray, x: np.ndarray) -> np.ndarray:
        """
        For every member i of idx: mu1_i + sum_j x_j mu2_ij + sum_jk x_j x_k mu3_ijk,
        the sums running over the other members.
        """
        scores = self._mu1[idx] + self._mu2[np.ix_(idx, idx)] @ x
        if len(idx) > 2 and len(self._tri_val):
            full = np.zeros(self._n)
            full[idx] = x
            t = self._tri_idx
            extra = np.zeros(self._n)
            np.add.at(extra, t[:, 0], self._tri_val * full[t[:, 1]] * full[t[:, 2]])
            np.add.at(extra, t[:, 1], self._tri_val * full[t[:, 0]] * full[t[:, 2]])
            np.add.at(extra, t[:, 2], self._tri_val * full[t[:, 0]] * full[t[:, 1]])
            # triples reaching outside idx contribute nothing: x is 0 there
            scores = scores + extra[idx]
        return scores

    def eval_set(self, A) -> float:
        idx = self._indices(A)
        return self.restricted_polynomial(idx, np.ones(len(idx)))

    def eval_partition(self, P: Partition) -> float:
        if not isinstance(P, Partition):
            P = Partition(P)
        if P.n != self._n:
            raise ValueError(f"partition covers {P.n} nodes, score has {self._n}")
        return float(sum(self.eval_set(block) for block in P))

    def subset_values(self) -> np.ndarray:
        """v on every bitmask 0..2^n-1, vectorized in blocks of SUBSET_TABLE_CHUNK masks."""
        if self._n > SUBSET_TABLE_MAX_NODES:
            raise CapExceededError("subset_values", self._n, SUBSET_TABLE_MAX_NODES)
        total = 1 << self._n
        values = np.empty(total)
        bits = np.arange(self._n)
        for start in range(0, total, SUBSET_TABLE_CHUNK):
            masks = np.arange(start, min(start + SUBSET_TABLE_CHUNK, total), dtype=np.int64)
            X = ((masks[:, None] >> bits) & 1).astype(float)
            chunk = X @ self._mu1 + 0.5 * np.einsum("mi,ij,mj->m", X, self._mu2, X)
            if len(self._tri_val):
                t = self._tri_idx
                chunk = chunk + (X[:, t[:, 0]] * X[:, t[:, 1]] * X[:, t[:, 2]]) @ self._tri_val
            values[start : start + len(masks)] = chunk
        return values

    def is_local_optimum(self, P: Partition, tol: float = 0.0) -> bool:
        """No block improves by splitting off a single member."""
        for block in P:
            if len(block) < 2:
                continue
            value = self.eval_set(block)
            for i in block:
                if value < self.eval_set(block.without(i)) + float(self._mu1[i]) - tol:
                    return False
        return True

    def __repr__(self) -> str:
        return f"ClusterScore(label={self.label!r}, n={self._n}, degree={self.degree})"


def equalize_singletons(score: ClusterScore, preserve_pairs: bool = False) -> ClusterScore:
    """
    Score-equivalent variant in which every node scores the same as a singleton.

    Default: mu1' = mean(mu1), mu2' = mu2. The difference v' - v is the
    zero-sum valuation A -> sum_{i in A} (mean - mu1_i), so V'(P) = V(P) on
    every partition.

    preserve_pairs=True instead keeps pair values, mu2'_ij = v({i,j}) - 2 mean;
    that variant only agrees with V on P_bot, P^top and on pair blocks.
    """
    if not score.is_quadratic:
        raise UnsupportedCaseError("equalize_singletons is defined for quadratic scores only")
    n = score.n
    mean = float(score.mu1.mean()) if n else 0.0
    mu1 = np.full(n, mean)
    if preserve_pairs:
        pair_values = score.mu1[:, None] + score.mu1[None, :] + score.mu2
        mu2 = pair_values - 2.0 * mean
        np.fill_diagonal(mu2, 0.0)
    else:
        mu2 = score.mu2.copy()
    logger.debug(f"[Scores] equalized singletons of {score!r} (preserve_pairs={preserve_pairs})")
    return ClusterScore(mu1, mu2, label=f"{score.label}+equalized", params=score.params)
