# search/greedy_clustering.py

"""
GreedyClustering: grow a partition out of a fuzzy cover.

Each iteration fixes one support subset as a block: first any subset that
its members already carry in full, otherwise the partially carried subset
with the largest average derivative. Nodes outside the new block move the
mass they held on subsets meeting it onto their remaining support. When no
node is left to place, a split pass removes any member whose departure
would raise the score.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from network.nodeset import NodeSet, canonical
from network.partition import Partition
from network.rng import make_rng
from mle.cover import FuzzyCover
from mle.objective import big_f
from scores.cluster_score import ClusterScore

from .config import TIE_TOLERANCE
from .initialization import per_member_score, shifted_weights
from .trace import SearchTrace

logger = logging.getLogger(__name__)


class GreedyClustering:
    """
    One seeded run of the greedy loop followed by the split check.

    The instance owns its cover and RNG; the score is only read.
    """

    def __init__(self, score: ClusterScore, init: FuzzyCover, seed: int = 0):
        if init.n != score.n:
            raise ValueError(f"cover has {init.n} nodes, score has {score.n}")
        self.score = score
        self.seed = seed
        self.rng = make_rng(seed)
        self.trace = SearchTrace(seed=seed)
        self.cover = init
        self.blocks: List[NodeSet] = []
        self._fixed: Set[int] = set()
        self._per_member: Dict[NodeSet, float] = {}

    # ------------------------------------------------------------ selection

    def _crisp_subsets(self) -> List[NodeSet]:
        """Support subsets all of whose members already put their whole mass there."""
        crisp = []
        for A, members in self.cover.groups().items():
            if A in self.blocks:
                continue
            if sum(members.values()) >= len(A) - TIE_TOLERANCE:
                crisp.append(A)
        return crisp

    def _selection_pool(self) -> List[NodeSet]:
        pool = []
        for A, members in self.cover.groups().items():
            if A in self.blocks:
                continue
            total = sum(members.values())
            if 0 < total < len(A) - TIE_TOLERANCE:
                pool.append(A)
        return pool

    def _select(self, pool: List[NodeSet]) -> Tuple[NodeSet, float, int]:
        values = np.empty(len(pool))
        for k, A in enumerate(pool):
            idx, x = self.cover.member_masses(A)
            values[k] = self.score.conditional_scores(idx, x).mean()
        best = values.max()
        ties = [A for A, value in zip(pool, values) if value >= best - TIE_TOLERANCE]
        chosen = ties[int(self.rng.integers(len(ties)))] if len(ties) > 1 else ties[0]
        return chosen, float(best), len(ties)

    # ------------------------------------------------------------ update

    def _per_member_score(self, A: NodeSet) -> float:
        return per_member_score(self.score, A, self._per_member)

    def _redistribute(self, j: int, mass: Dict[NodeSet, float], block: NodeSet) -> Dict[NodeSet, float]:
        """Move node j's mass off subsets meeting block, in proportion to the shifted v(B)/|B|."""
        lost = sum(m for B, m in mass.items() if not B.isdisjoint(block))
        if lost == 0:
            return mass
        surviving = [B for B in mass if B.isdisjoint(block)]
        if not surviving:
            logger.debug(f"[GreedyClustering] node {j} stranded by {block!r}, falls back to its singleton")
            return {NodeSet.single(j): 1.0}
        weights = shifted_weights([self._per_member_score(B) for B in surviving])
        weights = weights / weights.sum()
        return {B: mass[B] + lost * w for B, w in zip(surviving, weights.tolist())}

    def _fix(self, block: NodeSet) -> None:
        masses = self.cover.as_masses()
        for i in block:
            masses[i] = {block: 1.0}
        for j in range(self.score.n):
            if j in block or j in self._fixed:
                continue
            masses[j] = self._redistribute(j, masses[j], block)

        # normalize=True drops masses below the prune tolerance
        self.cover = FuzzyCover.from_masses(masses, normalize=True)
        self.blocks.append(block)
        self._fixed.update(block)
        self.trace.record("fix-block", [block], big_f(self.score, self.cover))

    # ------------------------------------------------------------ loops

    def greedy_loop(self) -> Partition:
        while len(self._fixed) < self.score.n:
            crisp = self._crisp_subsets()
            if crisp:
                logger.debug(f"[GreedyClustering] accepting crisp subset {crisp[0]!r}")
                self._fix(crisp[0])
                continue
            pool = self._selection_pool()
            if not pool:
                break
            block, value, ties = self._select(pool)
            logger.debug(
                f"[GreedyClustering] t={len(self.trace.steps)} fix {block!r} "
                f"avg-derivative={value:.6g} ties={ties}"
            )
            self._fix(block)

        leftover = [i for i in range(self.score.n) if i not in self._fixed]
        if leftover:
            logger.warning(f"[GreedyClustering] nodes {leftover} left unplaced, using singletons")
        return Partition(self.blocks + [NodeSet.single(i) for i in leftover])

    def check_loop(self, P: Partition) -> Partition:
        """Split off single members while that raises the score."""
        blocks = list(P.blocks)
        while True:
            split = self._find_split(blocks)
            if split is None:
                return Partition(blocks)
            block, i = split
            rest = block.without(i)
            blocks.remove(block)
            blocks.extend([NodeSet.single(i), rest])
            result = Partition(blocks)
            blocks = list(result.blocks)
            logger.debug(f"[GreedyClustering] split {i} off {block!r}")
            self.trace.record("split", [NodeSet.single(i), rest], self.score.eval_partition(result))

    def _find_split(self, blocks: List[NodeSet]) -> Optional[Tuple[NodeSet, int]]:
        for block in canonical(blocks):
            if len(block) < 2:
                continue
            value = self.score.eval_set(block)
            for i in block:
                split_value = self.score.eval_set(NodeSet.single(i)) + self.score.eval_set(block.without(i))
                if value < split_value - TIE_TOLERANCE:
                    return block, i
        return None

    def run(self) -> Tuple[Partition, SearchTrace]:
        result = self.check_loop(self.greedy_loop())
        logger.info(
            f"[GreedyClustering] seed={self.seed}: {len(result)} blocks, "
            f"V={self.score.eval_partition(result):.6g}, "
            f"{len(self.trace.objectives('split'))} split(s)"
        )
        return result, self.trace


def greedy_clustering(score: ClusterScore, init: FuzzyCover, seed: int = 0) -> Tuple[Partition, SearchTrace]:
    """Run GreedyClustering from the given cover with a seeded RNG."""
    return GreedyClustering(score, init, seed).run()
