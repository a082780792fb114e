# network/partition.py

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidPartitionError
from .nodeset import NodeSet


class Partition:
    """
    Nonempty pairwise-disjoint blocks covering 0..n-1.

    Blocks are kept in canonical order (by smallest member) so that equal
    partitions compare, hash and serialize identically.
    """

    __slots__ = ("_blocks", "_n", "_owner")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalized: List[NodeSet] = []
        seen = 0
        for block in blocks:
            block = block if isinstance(block, NodeSet) else NodeSet(block)
            if not block:
                raise InvalidPartitionError("partition blocks must be nonempty")
            if seen & block.bits:
                raise InvalidPartitionError(f"block {block!r} overlaps another block")
            seen |= block.bits
            normalized.append(block)
        n = seen.bit_count()
        if seen != (1 << n) - 1:
            missing = sorted(set(range(seen.bit_length())) - set(NodeSet.from_bits(seen)))
            raise InvalidPartitionError(f"blocks do not cover 0..{n - 1}; missing {missing}")

        self._blocks: Tuple[NodeSet, ...] = tuple(sorted(normalized, key=NodeSet.min))
        self._n = n
        self._owner: Optional[List[int]] = None

    # ------------------------------------------------------------ constructors

    @classmethod
    def bottom(cls, n: int) -> "Partition":
        """P_bot: all singletons."""
        return cls(NodeSet.single(i) for i in range(n))

    @classmethod
    def top(cls, n: int) -> "Partition":
        """P^top: one block."""
        return cls([NodeSet.full(n)] if n else [])

    @classmethod
    def single_block_bottom(cls, A: NodeSet, n: int) -> "Partition":
        """P^A_bot: A as one block, every other node a singleton."""
        A = A if isinstance(A, NodeSet) else NodeSet(A)
        A.check_range(n)
        if not A:
            return cls.bottom(n)
        return cls([A] + [NodeSet.single(i) for i in range(n) if i not in A])

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        groups = {}
        for node, label in enumerate(labels):
            groups.setdefault(label, []).append(node)
        return cls(groups.values())

    # -------------------------------------------------------------- accessors

    @property
    def blocks(self) -> Tuple[NodeSet, ...]:
        return self._blocks

    @property
    def n(self) -> int:
        return self._n

    def block_of(self, i: int) -> NodeSet:
        if self._owner is None:
            owner = [0] * self._n
            for index, block in enumerate(self._blocks):
                for node in block:
                    owner[node] = index
            self._owner = owner
        return self._blocks[self._owner[i]]

    def refines(self, other: "Partition") -> bool:
        """True iff every block of self lies inside a block of other (self <= other)."""
        if self._n != other._n:
            return False
        return all(block.issubset(other.block_of(block.min())) for block in self._blocks)

    def non_singleton_blocks(self) -> List[NodeSet]:
        return [b for b in self._blocks if len(b) > 1]

    def to_lists(self) -> List[List[int]]:
        return [list(b) for b in self._blocks]

    def __iter__(self) -> Iterator[NodeSet]:
        return iter(self._blocks)

    def __len__(self) -> int:
        return len(self._blocks)

    def __contains__(self, block) -> bool:
        block = block if isinstance(block, NodeSet) else NodeSet(block)
        return block in self._blocks

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash(self._blocks)

    def __repr__(self) -> str:
        return f"Partition({self.to_lists()})"

    def __reduce__(self):
        return (Partition, (self.to_lists(),))


def iter_partitions_of(members: Sequence[int]) -> Iterator[List[NodeSet]]:
    """
    All set partitions of the given members as lists of NodeSets.

    Generated through restricted-growth strings: member k joins one of the
    blocks opened so far or opens a new one. Order is lexicographic in the
    growth string, so the all-in-one-block partition comes first.
    """
    members = list(members)
    if not members:
        yield []
        return

    masks: List[int] = []

    def grow(k: int):
        if k == len(members):
            yield [NodeSet.from_bits(m) for m in masks]
            return
        bit = 1 << members[k]
        for b in range(len(masks)):
            masks[b] |= bit
            yield from grow(k + 1)
            masks[b] ^= bit
        masks.append(bit)
        yield from grow(k + 1)
        masks.pop()

    yield from grow(0)


def iter_partitions(n: int) -> Iterator[Partition]:
    """Every partition of 0..n-1, Bell(n) of them."""
    for blocks in iter_partitions_of(range(n)):
        yield Partition(blocks)


def iter_block_masks(n: int) -> Iterator[List[int]]:
    """Bitmask-level partition enumeration for hot loops (no validation)."""
    masks: List[int] = []

    def grow(k: int):
        if k == n:
            yield masks
            return
        bit = 1 << k
        for b in range(len(masks)):
            masks[b] |= bit
            yield from grow(k + 1)
            masks[b] ^= bit
        masks.append(bit)
        yield from grow(k + 1)
        masks.pop()

    yield from grow(0)
