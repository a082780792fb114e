# network/edge_list.py

"""
Edge-list text codec.

One edge per line, whitespace separated: ``u v`` or ``u v w``. Lines starting
with ``#`` and blank lines are ignored. Node ids are dense: every id between 0
and the largest id must appear on some line (isolated nodes are written as
weight-0 lines).
"""

import logging
import os
import tempfile
from typing import Dict, List, Tuple

from .config import COMMENT_PREFIX, DEFAULT_EDGE_WEIGHT
from .errors import GraphFormatError
from .graph import WeightedGraph, canonical_pair

logger = logging.getLogger(__name__)


def _parse_line(tokens: List[str], line_number: int) -> Tuple[int, int, float]:
    if len(tokens) not in (2, 3):
        raise GraphFormatError(f"expected 'u v' or 'u v w', got {len(tokens)} fields", line_number)
    try:
        u, v = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise GraphFormatError(f"node ids must be integers: {' '.join(tokens[:2])}", line_number) from None
    if u < 0 or v < 0:
        raise GraphFormatError("node ids must be non-negative", line_number)
    if u == v:
        raise GraphFormatError(f"self-loop on node {u}", line_number)
    weight = DEFAULT_EDGE_WEIGHT
    if len(tokens) == 3:
        try:
            weight = float(tokens[2])
        except ValueError:
            raise GraphFormatError(f"weight is not a number: {tokens[2]}", line_number) from None
        if not 0.0 <= weight <= 1.0:
            raise GraphFormatError(f"weight {weight} outside [0, 1]", line_number)
    return u, v, weight


def parse_edge_list(text: str) -> WeightedGraph:
    """Parse edge-list text into a WeightedGraph (n = 1 + largest id)."""
    weights: Dict[Tuple[int, int], float] = {}
    first_seen: Dict[Tuple[int, int], int] = {}
    mentioned = set()

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        u, v, weight = _parse_line(line.split(), line_number)
        pair = canonical_pair(u, v)
        if pair in first_seen:
            raise GraphFormatError(
                f"duplicate pair {pair} (first given on line {first_seen[pair]})", line_number
            )
        first_seen[pair] = line_number
        weights[pair] = weight
        mentioned.update(pair)

    n = max(mentioned) + 1 if mentioned else 0
    gaps = sorted(set(range(n)) - mentioned)
    if gaps:
        raise GraphFormatError(f"node ids must be dense 0..{n - 1}; never mentioned: {gaps}")

    graph = WeightedGraph(n, weights)
    logger.debug(f"[EdgeList] parsed {graph!r}")
    return graph


# constructor-style name for parse_edge_list
from_edge_list = parse_edge_list


def format_edge_list(graph: WeightedGraph) -> str:
    """Inverse of parse_edge_list; isolated nodes become weight-0 lines."""
    if graph.n == 1:
        raise GraphFormatError("a single-node graph has no edge-list encoding")
    lines = []
    covered = set()
    for (u, v), w in sorted(graph.weights.items()):
        lines.append(f"{u} {v}" if w == 1.0 else f"{u} {v} {w!r}")
        covered.update((u, v))

    isolated = [i for i in range(graph.n) if i not in covered]
    while len(isolated) >= 2:
        u, v = isolated.pop(0), isolated.pop(0)
        lines.append(f"{u} {v} 0")
    if isolated:
        u = isolated[0]
        partner = 0 if u != 0 else 1
        lines.append(f"{min(u, partner)} {max(u, partner)} 0")

    header = f"{COMMENT_PREFIX} n={graph.n} edges={graph.edge_count}"
    return "\n".join([header] + lines) + "\n"


def read_edge_list(path: str) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def write_text_atomic(path: str, text: str) -> None:
    """Write text to a temp file beside ``path`` and rename it into place."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def write_edge_list(graph: WeightedGraph, path: str) -> None:
    write_text_atomic(path, format_edge_list(graph))
    logger.info(f"[EdgeList] wrote {graph!r} to {path}")
