# search/oracle.py

"""
Exact optimum by exhaustive partition enumeration.

The subset-value table is computed once; every partition is then scored by
summing table lookups over its block bitmasks. Bell(12) is about 4.2 million
partitions, which bounds the sizes accepted here.
"""

import logging
from typing import List, Tuple

import numpy as np

from network.errors import CapExceededError
from network.nodeset import NodeSet
from network.partition import Partition, iter_block_masks
from scores.cluster_score import ClusterScore

from .config import BRUTE_FORCE_MAX_NODES, TIE_TOLERANCE

logger = logging.getLogger(__name__)


def _check_cap(score: ClusterScore, what: str) -> List[float]:
    if score.n > BRUTE_FORCE_MAX_NODES:
        raise CapExceededError(what, score.n, BRUTE_FORCE_MAX_NODES)
    return score.subset_values().tolist()


def _as_partition(masks: List[int]) -> Partition:
    return Partition(NodeSet.from_bits(m) for m in masks)


def brute_force_optimum(score: ClusterScore) -> Tuple[Partition, float]:
    """Maximizing partition (first in enumeration order on ties) and its value."""
    table = _check_cap(score, "brute_force_optimum")
    best_value, best_masks = -np.inf, None
    for masks in iter_block_masks(score.n):
        value = sum(table[m] for m in masks)
        if value > best_value + TIE_TOLERANCE:
            best_value, best_masks = value, list(masks)
    result = _as_partition(best_masks)
    logger.info(f"[Oracle] optimum over n={score.n}: {len(result)} blocks, V={best_value:.6g}")
    return result, float(best_value)


def brute_force_argmax(score: ClusterScore) -> Tuple[List[Partition], float]:
    """Every partition within TIE_TOLERANCE of the optimum, in enumeration order."""
    table = _check_cap(score, "brute_force_argmax")
    best_value, winners = -np.inf, []
    for masks in iter_block_masks(score.n):
        value = sum(table[m] for m in masks)
        if value > best_value + TIE_TOLERANCE:
            best_value, winners = value, [list(masks)]
        elif value >= best_value - TIE_TOLERANCE:
            winners.append(list(masks))
            best_value = max(best_value, value)
    # a later strict improvement below the tolerance can leave stale entries
    winners = [w for w in winners if sum(table[m] for m in w) >= best_value - TIE_TOLERANCE]
    return [_as_partition(w) for w in winners], float(best_value)


def brute_force_worst(score: ClusterScore) -> Tuple[Partition, float]:
    """Minimizing partition and its value."""
    table = _check_cap(score, "brute_force_worst")
    worst_value, worst_masks = np.inf, None
    for masks in iter_block_masks(score.n):
        value = sum(table[m] for m in masks)
        if value < worst_value - TIE_TOLERANCE:
            worst_value, worst_masks = value, list(masks)
    return _as_partition(worst_masks), float(worst_value)


def is_local_optimum(score: ClusterScore, P: Partition) -> bool:
    """True iff no block gains by splitting off one member."""
    if not isinstance(P, Partition):
        P = Partition(P)
    return score.is_local_optimum(P, tol=TIE_TOLERANCE)
