# mle/cover.py

import logging
from itertools import combinations
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from network.errors import CapExceededError, InvalidCoverError
from network.nodeset import NodeSet
from network.partition import Partition

from .config import PRUNE_TOLERANCE, UNIFORM_COVER_MAX_NODES, UNIT_MASS_TOLERANCE

logger = logging.getLogger(__name__)


class MembershipDistribution:
    """
    One node's unit membership spread over subsets that contain it.

    Only positive masses are stored. With ``normalize=True`` masses below
    PRUNE_TOLERANCE are dropped and the rest rescaled to sum to 1; otherwise
    the masses must already sum to 1 within ``tolerance``.
    """

    __slots__ = ("_node", "_mass")

    def __init__(
        self,
        node: int,
        mass: Mapping,
        normalize: bool = False,
        tolerance: float = UNIT_MASS_TOLERANCE,
    ):
        node = int(node)
        entries: Dict[NodeSet, float] = {}
        for A, value in mass.items():
            A = A if isinstance(A, NodeSet) else NodeSet(A)
            if node not in A:
                raise InvalidCoverError(f"node {node} puts mass on {A!r} which does not contain it")
            value = float(value)
            if value < 0 or not np.isfinite(value):
                raise InvalidCoverError(f"node {node} has invalid mass {value} on {A!r}")
            entries[A] = entries.get(A, 0.0) + value

        if normalize:
            entries = {A: m for A, m in entries.items() if m >= PRUNE_TOLERANCE}
            total = sum(entries.values())
            if total <= 0:
                raise InvalidCoverError(f"node {node} has no mass left to normalize")
            entries = {A: m / total for A, m in entries.items()}
        else:
            entries = {A: m for A, m in entries.items() if m > 0}
            total = sum(entries.values())
            if abs(total - 1.0) > tolerance:
                raise InvalidCoverError(f"masses of node {node} sum to {total}, expected 1")

        self._node = node
        self._mass = MappingProxyType(dict(sorted(entries.items(), key=lambda kv: kv[0].sort_key())))

    @classmethod
    def point(cls, node: int, A) -> "MembershipDistribution":
        return cls(node, {A: 1.0})

    @property
    def node(self) -> int:
        return self._node

    @property
    def mass(self) -> Mapping[NodeSet, float]:
        return self._mass

    def get(self, A: NodeSet, default: float = 0.0) -> float:
        return self._mass.get(A, default)

    def support(self) -> Tuple[NodeSet, ...]:
        return tuple(self._mass)

    def items(self):
        return self._mass.items()

    @property
    def total(self) -> float:
        return float(sum(self._mass.values()))

    def is_point(self) -> bool:
        return len(self._mass) == 1

    def __len__(self) -> int:
        return len(self._mass)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MembershipDistribution):
            return NotImplemented
        return self._node == other._node and dict(self._mass) == dict(other._mass)

    def __repr__(self) -> str:
        body = ", ".join(f"{list(A)}: {m:.6g}" for A, m in self._mass.items())
        return f"MembershipDistribution(node={self._node}, {{{body}}})"


class FuzzyCover:
    """
    n membership distributions, one per node: the search state.

    Mass of node j on A is implicitly zero whenever j is not in A, so every
    instance is a fuzzy cover by construction. The per-subset grouping
    (A -> {member: mass}) is built lazily and cached.
    """

    __slots__ = ("_dists", "_groups")

    def __init__(self, dists: Sequence[MembershipDistribution]):
        dists = tuple(dists)
        for i, dist in enumerate(dists):
            if dist.node != i:
                raise InvalidCoverError(f"distribution at position {i} belongs to node {dist.node}")
        n = len(dists)
        for dist in dists:
            for A in dist.support():
                if A.bits >> n:
                    raise InvalidCoverError(f"subset {A!r} has members outside 0..{n - 1}")
        self._dists = dists
        self._groups: Optional[Dict[NodeSet, Dict[int, float]]] = None

    @classmethod
    def from_masses(cls, masses: Sequence[Mapping], normalize: bool = False) -> "FuzzyCover":
        return cls([MembershipDistribution(i, m, normalize=normalize) for i, m in enumerate(masses)])

    @property
    def n(self) -> int:
        return len(self._dists)

    @property
    def dists(self) -> Tuple[MembershipDistribution, ...]:
        return self._dists

    def dist(self, i: int) -> MembershipDistribution:
        return self._dists[i]

    def mass(self, i: int, A: NodeSet) -> float:
        return self._dists[i].get(A)

    def groups(self) -> Dict[NodeSet, Dict[int, float]]:
        """Support subsets mapped to the positive masses their members put on them."""
        if self._groups is None:
            groups: Dict[NodeSet, Dict[int, float]] = {}
            for dist in self._dists:
                for A, m in dist.items():
                    groups.setdefault(A, {})[dist.node] = m
            self._groups = {A: groups[A] for A in sorted(groups, key=NodeSet.sort_key)}
        return self._groups

    def support(self) -> Tuple[NodeSet, ...]:
        return tuple(self.groups())

    def group_mass(self, A: NodeSet) -> float:
        return float(sum(self.groups().get(A, {}).values()))

    def member_masses(self, A: NodeSet) -> Tuple[np.ndarray, np.ndarray]:
        """Member indices of A and the masses they put on A (zeros included)."""
        idx = np.fromiter(A, dtype=np.int64, count=len(A))
        x = np.array([self._dists[i].get(A) for i in idx], dtype=float)
        return idx, x

    def replace(self, i: int, dist: MembershipDistribution) -> "FuzzyCover":
        dists = list(self._dists)
        dists[i] = dist
        return FuzzyCover(dists)

    def is_fuzzy_clustering(self) -> bool:
        return all(len(members) == len(A) for A, members in self.groups().items())

    def violations(self) -> List[NodeSet]:
        """Support subsets carried by only some of their members."""
        return [A for A, members in self.groups().items() if len(members) != len(A)]

    def as_masses(self) -> List[Dict[NodeSet, float]]:
        return [dict(d.mass) for d in self._dists]

    def __iter__(self) -> Iterator[MembershipDistribution]:
        return iter(self._dists)

    def __len__(self) -> int:
        return len(self._dists)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyCover):
            return NotImplemented
        return self._dists == other._dists

    def __repr__(self) -> str:
        return f"FuzzyCover(n={self.n}, support={len(self.groups())})"


def is_fuzzy_clustering(q: FuzzyCover) -> bool:
    return q.is_fuzzy_clustering()


def partition_to_cover(P: Partition) -> FuzzyCover:
    if not isinstance(P, Partition):
        P = Partition(P)
    return FuzzyCover([MembershipDistribution.point(i, P.block_of(i)) for i in range(P.n)])


def uniform_cover(n: int) -> FuzzyCover:
    """Every node uniform over all 2^(n-1) subsets containing it."""
    if n > UNIFORM_COVER_MAX_NODES:
        raise CapExceededError("uniform_cover", n, UNIFORM_COVER_MAX_NODES)
    if n < 1:
        raise ValueError("uniform_cover needs at least one node")
    share = 2.0 ** (1 - n)
    dists = []
    for i in range(n):
        others = [j for j in range(n) if j != i]
        mass = {}
        for size in range(len(others) + 1):
            for rest in combinations(others, size):
                mass[NodeSet(rest).with_node(i)] = share
        dists.append(MembershipDistribution(i, mass))
    logger.debug(f"[Cover] uniform cover on {n} nodes, {2 ** (n - 1)} subsets per node")
    return FuzzyCover(dists)


def pairs_cover(n: int) -> FuzzyCover:
    """Every node uniform over the n-1 pairs containing it."""
    if n < 2:
        raise ValueError("pairs_cover needs at least two nodes")
    share = 1.0 / (n - 1)
    return FuzzyCover(
        [
            MembershipDistribution(i, {NodeSet((i, j)): share for j in range(n) if j != i})
            for i in range(n)
        ]
    )


def cover_from_lists(entries: Iterable[Iterable[Tuple[Iterable[int], float]]], tolerance: float) -> FuzzyCover:
    """Build a cover from per-node (members, mass) lists, renormalizing within tolerance."""
    dists = []
    for i, pairs in enumerate(entries):
        mass: Dict[NodeSet, float] = {}
        for members, value in pairs:
            A = NodeSet(members)
            mass[A] = mass.get(A, 0.0) + float(value)
        total = sum(mass.values())
        if abs(total - 1.0) > tolerance:
            raise InvalidCoverError(f"masses of node {i} sum to {total}, expected 1 +- {tolerance}")
        dists.append(MembershipDistribution(i, mass, normalize=True))
    return FuzzyCover(dists)
