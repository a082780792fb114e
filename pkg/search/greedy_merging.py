# search/greedy_merging.py

import logging
from typing import List, Optional, Tuple

import numpy as np

from network.nodeset import NodeSet
from network.partition import Partition
from network.rng import make_rng
from scores.cluster_score import ClusterScore

from .config import TIE_TOLERANCE
from .trace import SearchTrace

logger = logging.getLogger(__name__)


def _merge_gains(score: ClusterScore, blocks: List[NodeSet], values: List[float]) -> np.ndarray:
    """gains[a, b] = v(A u B) - v(A) - v(B) for a < b; -inf elsewhere."""
    k = len(blocks)
    gains = np.full((k, k), -np.inf)
    if score.is_quadratic:
        indicator = np.zeros((k, score.n))
        for a, block in enumerate(blocks):
            indicator[a, list(block)] = 1.0
        cross = indicator @ score.mu2 @ indicator.T
        upper = np.triu_indices(k, k=1)
        gains[upper] = cross[upper]
    else:
        for a in range(k):
            for b in range(a + 1, k):
                gains[a, b] = score.eval_set(blocks[a] | blocks[b]) - values[a] - values[b]
    return gains


def greedy_merging(
    score: ClusterScore,
    start: Optional[Partition] = None,
    seed: int = 0,
) -> Tuple[Partition, SearchTrace]:
    """
    Agglomerative baseline: merge the two blocks with the largest strictly
    positive gain until no merge improves the score. Gains within
    TIE_TOLERANCE of the best are tied and one is drawn with the seeded RNG.
    """
    start = Partition.bottom(score.n) if start is None else start
    if start.n != score.n:
        raise ValueError(f"start partition covers {start.n} nodes, score has {score.n}")

    rng = make_rng(seed)
    trace = SearchTrace(seed=seed)
    blocks = list(start.blocks)
    values = [score.eval_set(b) for b in blocks]

    while len(blocks) > 1:
        gains = _merge_gains(score, blocks, values)
        best = gains.max()
        if best <= TIE_TOLERANCE:
            break
        rows, cols = np.nonzero(gains >= best - TIE_TOLERANCE)
        ties = sorted(zip(rows.tolist(), cols.tolist()))
        a, b = ties[int(rng.integers(len(ties)))] if len(ties) > 1 else ties[0]

        merged = blocks[a] | blocks[b]
        logger.debug(f"[GreedyMerging] merge {blocks[a]!r} + {blocks[b]!r} gain={best:.6g} ties={len(ties)}")
        pair = (blocks[a], blocks[b])
        value = score.eval_set(merged)
        for index in (b, a):
            del blocks[index]
            del values[index]
        blocks.append(merged)
        values.append(value)
        ordered = sorted(zip(blocks, values), key=lambda bv: bv[0].min())
        blocks, values = [b for b, _ in ordered], [v for _, v in ordered]
        trace.record("merge", pair, sum(values))

    result = Partition(blocks)
    logger.info(
        f"[GreedyMerging] seed={seed}: {len(result)} blocks, "
        f"V={score.eval_partition(result):.6g} after {len(trace.steps)} merges"
    )
    return result, trace
