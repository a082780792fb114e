# search/initialization.py

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from network.errors import CapExceededError
from network.graph import WeightedGraph
from network.nodeset import NodeSet
from mle.cover import FuzzyCover, MembershipDistribution
from scores.cluster_score import ClusterScore

from .config import ALL_SUBSETS_MAX_NODES, SHIFT_EPSILON, TIE_TOLERANCE

logger = logging.getLogger(__name__)


class CandidateFamily:
    """
    Subsets allowed to carry initial membership.

    Searching from such a family restricts every later block to subsets of
    its members' support, so the family also bounds what the search can find.
    """

    def __init__(self, subsets: Iterable, n: int):
        unique = {}
        for s in subsets:
            s = s if isinstance(s, NodeSet) else NodeSet(s)
            if not s:
                raise ValueError("candidate subsets must be nonempty")
            s.check_range(n)
            unique[s] = None
        if not unique:
            raise ValueError("candidate family must not be empty")
        self.n = n
        self.subsets: Tuple[NodeSet, ...] = tuple(sorted(unique, key=NodeSet.size_key))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], n: Optional[int] = None) -> "CandidateFamily":
        """Family from member lists; n defaults to one past the largest member."""
        sets = [s if isinstance(s, NodeSet) else NodeSet(s) for s in sets]
        if n is None:
            n = max((s.max() for s in sets if s), default=-1) + 1
        return cls(sets, n)

    @classmethod
    def all_subsets(cls, n: int) -> "CandidateFamily":
        if n > ALL_SUBSETS_MAX_NODES:
            raise CapExceededError("all-subsets family", n, ALL_SUBSETS_MAX_NODES)
        return cls((NodeSet.from_bits(mask) for mask in range(1, 1 << n)), n)

    @classmethod
    def all_pairs(cls, n: int) -> "CandidateFamily":
        return cls((NodeSet(p) for p in combinations(range(n), 2)), n)

    @classmethod
    def singletons(cls, n: int) -> "CandidateFamily":
        return cls((NodeSet.single(i) for i in range(n)), n)

    @classmethod
    def edges_of(cls, graph: WeightedGraph) -> "CandidateFamily":
        pairs = [NodeSet(p) for p in graph.edges()]
        if not pairs:
            return cls.singletons(graph.n)
        return cls(pairs, graph.n)

    def containing(self, i: int) -> List[NodeSet]:
        return [s for s in self.subsets if i in s]

    def __len__(self) -> int:
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)

    def __repr__(self) -> str:
        return f"CandidateFamily(n={self.n}, subsets={len(self.subsets)})"


def shifted_weights(per_member: Sequence[float]) -> np.ndarray:
    """
    Positive weights from per-member scores v(A)/|A|.

    Used as is when all are positive; otherwise shifted so that the smallest
    becomes SHIFT_EPSILON, which keeps the order and the differences.
    """
    values = np.asarray(per_member, dtype=float)
    if len(values) and values.min() <= 0:
        values = values - values.min() + SHIFT_EPSILON
    return values


def per_member_score(score: ClusterScore, A: NodeSet, cache: Optional[Dict[NodeSet, float]] = None) -> float:
    if cache is not None and A in cache:
        return cache[A]
    value = score.eval_set(A) / len(A)
    if cache is not None:
        cache[A] = value
    return value


def init_threshold(score: ClusterScore, fam: CandidateFamily, theta: float = 0.0) -> FuzzyCover:
    """
    Initial cover from per-member scores: node i spreads its mass over the
    family members containing it whose v(A)/|A| exceeds theta, in proportion
    to their (shifted) per-member scores. Nodes left with nothing get their
    singleton.
    """
    if fam.n != score.n:
        raise ValueError(f"family is over {fam.n} nodes, score has {score.n}")
    cache: Dict[NodeSet, float] = {}
    dists = []
    fallbacks = 0
    for i in range(score.n):
        kept = [A for A in fam.containing(i) if per_member_score(score, A, cache) > theta + TIE_TOLERANCE]
        if not kept:
            fallbacks += 1
            dists.append(MembershipDistribution.point(i, NodeSet.single(i)))
            continue
        weights = shifted_weights([cache[A] for A in kept])
        weights = weights / weights.sum()
        dists.append(MembershipDistribution(i, dict(zip(kept, weights.tolist())), normalize=True))
    if fallbacks:
        logger.debug(f"[Init] {fallbacks} node(s) fell back to their singleton at theta={theta}")
    return FuzzyCover(dists)
