# supervisor/family.py

import logging
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from network.nodeset import NodeSet, canonical
from network.partition import Partition
from scores.cluster_score import ClusterScore

logger = logging.getLogger(__name__)


class FamilyEntry(NamedTuple):
    value: float
    run_ids: Tuple[int, ...]


class BestRun(NamedTuple):
    run_id: int
    partition: Partition
    value: float


class WeightedFamily:
    """
    Union of the blocks output by several runs, each weighted by its score
    and tagged with the runs that produced it. Members may overlap.
    """

    def __init__(self, score: ClusterScore):
        self.score = score
        self._entries: Dict[NodeSet, FamilyEntry] = {}
        self._runs: Dict[int, Partition] = {}

    def add_run(self, run_id: int, partition: Partition) -> None:
        if run_id in self._runs:
            raise ValueError(f"run {run_id} is already recorded")
        if partition.n != self.score.n:
            raise ValueError(f"run {run_id} partitions {partition.n} nodes, score has {self.score.n}")
        self._runs[run_id] = partition
        for block in partition:
            entry = self._entries.get(block)
            if entry is None:
                self._entries[block] = FamilyEntry(self.score.eval_set(block), (run_id,))
            else:
                self._entries[block] = entry._replace(run_ids=tuple(sorted(entry.run_ids + (run_id,))))

    @property
    def n(self) -> int:
        return self.score.n

    @property
    def entries(self) -> Mapping[NodeSet, FamilyEntry]:
        return MappingProxyType({A: self._entries[A] for A in canonical(self._entries)})

    @property
    def runs(self) -> Mapping[int, Partition]:
        return MappingProxyType(dict(sorted(self._runs.items())))

    def members(self) -> List[NodeSet]:
        return canonical(self._entries)

    def value(self, A: NodeSet) -> float:
        return self._entries[A].value

    def run_ids(self, A: NodeSet) -> Tuple[int, ...]:
        return self._entries[A].run_ids

    def membership_index(self) -> Dict[int, List[NodeSet]]:
        """Node -> family members containing it."""
        index: Dict[int, List[NodeSet]] = {i: [] for i in range(self.n)}
        for A in self.members():
            for i in A:
                index[i].append(A)
        return index

    def best_run(self) -> Optional[BestRun]:
        """Run whose partition scores highest; the lowest run id wins ties."""
        best: Optional[BestRun] = None
        for run_id, partition in sorted(self._runs.items()):
            value = sum(self._entries[block].value for block in partition)
            if best is None or value > best.value:
                best = BestRun(run_id, partition, value)
        return best

    def is_disjoint(self) -> bool:
        seen = 0
        for A in self._entries:
            if seen & A.bits:
                return False
            seen |= A.bits
        return True

    def merged(self, other: "WeightedFamily") -> "WeightedFamily":
        """Family holding the runs of both; run ids must not collide."""
        if other.n != self.n:
            raise ValueError(f"cannot merge families over {self.n} and {other.n} nodes")
        clashes = set(self._runs) & set(other._runs)
        if clashes:
            raise ValueError(f"run ids {sorted(clashes)} appear in both families")
        result = WeightedFamily(self.score)
        for run_id, partition in sorted({**self._runs, **other._runs}.items()):
            result.add_run(run_id, partition)
        return result

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, A) -> bool:
        A = A if isinstance(A, NodeSet) else NodeSet(A)
        return A in self._entries

    def __iter__(self) -> Iterator[NodeSet]:
        return iter(self.members())

    def __repr__(self) -> str:
        return f"WeightedFamily(n={self.n}, members={len(self._entries)}, runs={len(self._runs)})"
