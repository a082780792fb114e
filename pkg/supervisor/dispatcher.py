# supervisor/dispatcher.py
import logging
from typing import List, NamedTuple, Sequence

from network.partition import Partition
from mle.cover import FuzzyCover
from scores.cluster_score import ClusterScore
from search.greedy_clustering import greedy_clustering
from search.trace import SearchTrace

from supervisor.family import WeightedFamily

logger = logging.getLogger(__name__)


class RunResult(NamedTuple):
    run_id: int
    seed: int
    partition: Partition
    trace: SearchTrace


class Dispatcher:
    """
    Sends each initial cover to its own GreedyClustering run.
    Run k gets seed base_seed + k and id run_offset + k.
    """

    def __init__(self, score: ClusterScore):
        self.score = score

    def dispatch(self, inits: Sequence[FuzzyCover], base_seed: int = 0, run_offset: int = 0) -> List[RunResult]:
        """
        Run GreedyClustering once per initial cover.

        Args:
            inits: Initial covers, one per run
            base_seed: Seed of the first run
            run_offset: Id of the first run

        Returns:
            Run results ordered by run id
        """
        if not inits:
            raise ValueError("multi-run needs at least one initial cover")

        results = []
        for index, init in enumerate(inits):
            seed, run_id = base_seed + index, run_offset + index
            try:
                partition, trace = greedy_clustering(self.score, init, seed)
            except Exception as e:
                logger.error(f"[Dispatcher] run {run_id} (seed {seed}) failed: {e}", exc_info=True)
                raise
            logger.debug(f"[Dispatcher] run {run_id} (seed {seed}) -> {partition.to_lists()}")
            results.append(RunResult(run_id, seed, partition, trace))

        logger.info(f"[Dispatcher] {len(results)} run(s) completed from seed {base_seed}")
        return results

    def collect(self, results: Sequence[RunResult]) -> WeightedFamily:
        family = WeightedFamily(self.score)
        for result in results:
            family.add_run(result.run_id, result.partition)
        return family


def multi_run(
    score: ClusterScore,
    inits: Sequence[FuzzyCover],
    base_seed: int = 0,
    run_offset: int = 0,
) -> WeightedFamily:
    """Union of the blocks of one GreedyClustering run per initial cover."""
    dispatcher = Dispatcher(score)
    return dispatcher.collect(dispatcher.dispatch(inits, base_seed, run_offset))
