# cli/records.py

"""
File formats of the runner.

Partitions, families and covers are YAML documents built from the pydantic
records below; block member lists are ascending and blocks are listed in
canonical order. Search traces are JSON lines, one step per line.
"""

import logging
from typing import Dict, List, Optional

import yaml
from pydantic import BaseModel, ConfigDict, ValidationError

from network.edge_list import read_edge_list, write_text_atomic
from network.errors import ModuleSearchError
from network.graph import WeightedGraph
from network.nodeset import NodeSet
from network.partition import Partition
from mle.config import LOAD_MASS_TOLERANCE
from mle.cover import FuzzyCover, cover_from_lists
from search.trace import SearchTrace
from supervisor.family import WeightedFamily

logger = logging.getLogger(__name__)


class InputFileError(Exception):
    """An input file is missing, unreadable or malformed."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"cannot open {path}: {reason}")
        self.path = path


class PartitionRecord(BaseModel):
    command: str
    score: str
    params: Dict[str, float] = {}
    seed: Optional[int] = None
    n: int
    blocks: List[List[int]]
    value: float
    local_optimum: bool


class FamilyEntryRecord(BaseModel):
    members: List[int]
    value: float
    run_ids: List[int]


class FamilyRecord(BaseModel):
    score: str
    params: Dict[str, float] = {}
    seed: int
    n: int
    entries: List[FamilyEntryRecord]
    membership: Dict[int, List[List[int]]]
    runs: Dict[int, List[List[int]]]
    best_run: Optional[int] = None


class StartPartition(BaseModel):
    model_config = ConfigDict(extra="ignore")

    blocks: List[List[int]]


class CoverEntryRecord(BaseModel):
    members: List[int]
    mass: float


class CoverRecord(BaseModel):
    model_config = ConfigDict(extra="ignore")

    cover: List[List[CoverEntryRecord]]


def family_record(family: WeightedFamily, seed: int) -> FamilyRecord:
    best = family.best_run()
    return FamilyRecord(
        score=family.score.label,
        params=family.score.params,
        seed=seed,
        n=family.n,
        entries=[
            FamilyEntryRecord(members=list(A), value=entry.value, run_ids=list(entry.run_ids))
            for A, entry in family.entries.items()
        ],
        membership={i: [list(A) for A in sets] for i, sets in family.membership_index().items()},
        runs={run_id: P.to_lists() for run_id, P in family.runs.items()},
        best_run=None if best is None else best.run_id,
    )


def to_yaml(record: BaseModel) -> str:
    return yaml.safe_dump(record.model_dump(), sort_keys=False, default_flow_style=None)


def emit(text: str, path: Optional[str]) -> None:
    """Write text atomically to path, or to stdout when no path is given."""
    if path is None:
        print(text, end="")
        return
    write_text_atomic(path, text)
    logger.info(f"[Records] wrote {path}")


def _read_yaml(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return yaml.safe_load(handle)
    except OSError as e:
        raise InputFileError(path, e.strerror or str(e)) from e
    except yaml.YAMLError as e:
        raise InputFileError(path, f"not valid YAML ({e})") from e


def load_graph(path: str) -> WeightedGraph:
    try:
        return read_edge_list(path)
    except OSError as e:
        raise InputFileError(path, e.strerror or str(e)) from e
    except ModuleSearchError as e:
        raise InputFileError(path, str(e)) from e


def load_partition(path: str, n: int) -> Partition:
    try:
        record = StartPartition.model_validate(_read_yaml(path))
        partition = Partition(record.blocks)
    except (ValidationError, ModuleSearchError) as e:
        raise InputFileError(path, str(e)) from e
    if partition.n != n:
        raise InputFileError(path, f"partition covers {partition.n} nodes, graph has {n}")
    return partition


def load_cover(path: str, n: int) -> FuzzyCover:
    """Cover file: per node, a list of {members, mass}; each node's masses sum to 1 within 1e-6."""
    try:
        record = CoverRecord.model_validate(_read_yaml(path))
        cover = cover_from_lists(
            ([(NodeSet(e.members), e.mass) for e in node] for node in record.cover),
            LOAD_MASS_TOLERANCE,
        )
    except (ValidationError, ModuleSearchError) as e:
        raise InputFileError(path, str(e)) from e
    if cover.n != n:
        raise InputFileError(path, f"cover has {cover.n} nodes, graph has {n}")
    return cover


def write_trace(trace: SearchTrace, path: str) -> None:
    write_text_atomic(path, trace.to_jsonl())
    logger.info(f"[Records] wrote {len(trace.steps)} trace steps to {path}")
