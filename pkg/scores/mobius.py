# scores/mobius.py

"""
Moebius inversion on the subset lattice and on the partition lattice.

Both work on explicit tables and are meant for small-n verification: the
subset transform is O(n 2^n), the partition one walks Bell(n) partitions.
"""

import logging
from itertools import product
from typing import Callable, Dict, Iterable, List, Mapping, Union

import numpy as np

from network.errors import CapExceededError
from network.nodeset import NodeSet
from network.partition import Partition, iter_partitions, iter_partitions_of

from .cluster_score import ClusterScore
from .config import MOBIUS_MAX_NODES, PARTITION_MOBIUS_MAX_NODES, TOLERANCE

logger = logging.getLogger(__name__)

SetFunction = Union[Callable[[NodeSet], float], Mapping[NodeSet, float]]
PartitionFunction = Union[Callable[[Partition], float], Mapping[Partition, float]]


def _set_table(v: SetFunction, n: int) -> np.ndarray:
    table = np.empty(1 << n)
    for mask in range(1 << n):
        A = NodeSet.from_bits(mask)
        if isinstance(v, Mapping):
            table[mask] = v.get(A, 0.0) if mask == 0 else v[A]
        else:
            table[mask] = v(A)
    return table


def mobius_inversion(v: SetFunction, n: int) -> Dict[NodeSet, float]:
    """
    mu^v with v(B) = sum_{A subset of B} mu^v(A).

    Args:
        v: Set function given as a callable or as a map over all 2^n subsets
            (the empty set may be omitted from a map).
        n: Ground-set size, at most MOBIUS_MAX_NODES.
    """
    if n > MOBIUS_MAX_NODES:
        raise CapExceededError("mobius_inversion", n, MOBIUS_MAX_NODES)
    table = _set_table(v, n)
    if abs(table[0]) > TOLERANCE:
        raise ValueError(f"set function must vanish on the empty set, got {table[0]}")

    # fast subset-difference transform, one coordinate at a time
    mu = table.copy()
    masks = np.arange(1 << n)
    for i in range(n):
        has_i = (masks >> i) & 1 == 1
        mu[has_i] -= mu[masks[has_i] ^ (1 << i)]
    return {NodeSet.from_bits(int(mask)): float(mu[mask]) for mask in range(1 << n)}


def zeta_transform(mu: Mapping[NodeSet, float], n: int) -> Dict[NodeSet, float]:
    """Inverse of mobius_inversion: v(B) = sum over subsets A of B of mu(A)."""
    if n > MOBIUS_MAX_NODES:
        raise CapExceededError("zeta_transform", n, MOBIUS_MAX_NODES)
    table = np.zeros(1 << n)
    for A, value in mu.items():
        table[A.bits] = value
    masks = np.arange(1 << n)
    for i in range(n):
        has_i = (masks >> i) & 1 == 1
        table[has_i] += table[masks[has_i] ^ (1 << i)]
    return {NodeSet.from_bits(int(mask)): float(table[mask]) for mask in range(1 << n)}


def score_to_set_function(score: ClusterScore) -> Dict[NodeSet, float]:
    values = score.subset_values()
    return {NodeSet.from_bits(mask): float(values[mask]) for mask in range(len(values))}


def _refinements(P: Partition) -> Iterable[Partition]:
    """Every partition Q <= P (blockwise refinement), P included."""
    per_block: List[List[List[NodeSet]]] = [list(iter_partitions_of(tuple(b))) for b in P]
    for choice in product(*per_block):
        yield Partition([block for blocks in choice for block in blocks])


def partition_mobius(V: PartitionFunction, n: int) -> Dict[Partition, float]:
    """
    mu^V(P) = V(P) - sum_{Q < P} mu^V(Q) over the refinement order.

    Partitions are processed finest first, so every strict refinement of P
    already has its coefficient when P is reached.
    """
    if n > PARTITION_MOBIUS_MAX_NODES:
        raise CapExceededError("partition_mobius", n, PARTITION_MOBIUS_MAX_NODES)
    lookup = V.__getitem__ if isinstance(V, Mapping) else V

    partitions = sorted(iter_partitions(n), key=len, reverse=True)
    mu: Dict[Partition, float] = {}
    for P in partitions:
        below = sum(mu[Q] for Q in _refinements(P) if Q != P)
        mu[P] = float(lookup(P)) - below
    logger.debug(f"[Mobius] partition inversion over {len(partitions)} partitions of {n} nodes")
    return mu


def additive_partition_function(score: ClusterScore) -> Callable[[Partition], float]:
    """P -> sum of v over the blocks of P."""
    return score.eval_partition


def modular_elements(n: int) -> List[Partition]:
    """Partitions with at most one non-singleton block (P_bot and every P^A_bot)."""
    return [P for P in iter_partitions(n) if len(P.non_singleton_blocks()) <= 1]
