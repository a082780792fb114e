# supervisor/omega.py

import heapq
import logging
from typing import Iterable, List, Optional

from network.nodeset import NodeSet, canonical

from supervisor.config import OMEGA_MAX_MEMBERS
from supervisor.family import WeightedFamily

logger = logging.getLogger(__name__)


def union_closure(
    members: Iterable[NodeSet],
    max_size: int,
    max_members: int = OMEGA_MAX_MEMBERS,
) -> List[NodeSet]:
    """
    Distinct unions of one or more members, smallest first.

    Unions are grown one member at a time from a heap keyed on
    (size, sorted members), so sets come out in that order and truncation
    at max_members drops the largest ones.
    """
    if max_members < 1:
        raise ValueError("max_members must be positive")
    unique = {m if isinstance(m, NodeSet) else NodeSet(m) for m in members}
    members = canonical(m for m in unique if len(m) <= max_size)
    heap = [(len(m), m.sort_key(), m) for m in members]
    heapq.heapify(heap)
    seen = set(members)
    result: List[NodeSet] = []

    while heap and len(result) < max_members:
        _, _, current = heapq.heappop(heap)
        result.append(current)
        for m in members:
            union = current | m
            if len(union) <= max_size and union not in seen:
                seen.add(union)
                heapq.heappush(heap, (len(union), union.sort_key(), union))

    if heap:
        logger.warning(f"[Omega] closure truncated at {max_members} sets ({len(heap)} pending)")
    return result


def omega(
    family: WeightedFamily,
    max_size: Optional[int] = None,
    max_members: int = OMEGA_MAX_MEMBERS,
) -> List[NodeSet]:
    """Union closure of the family members; max_size defaults to n."""
    if not len(family):
        raise ValueError("omega needs a nonempty family")
    max_size = family.n if max_size is None else max_size
    result = union_closure(family.members(), max_size, max_members)
    logger.debug(f"[Omega] {len(family)} members -> {len(result)} sets (max_size={max_size})")
    return result
