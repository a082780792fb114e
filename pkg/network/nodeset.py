# network/nodeset.py

from collections.abc import Set
from typing import Iterable, Iterator, Tuple


class NodeSet(Set):
    """
    Immutable set of node indices backed by an integer bitmask.

    Equality and hashing go through the mask, so two NodeSets with the same
    members are interchangeable as dict keys. Canonical order compares the
    ascending member tuples (``{0, 2} < {1}``).
    """

    __slots__ = ("_bits",)

    def __init__(self, members: Iterable[int] = ()):
        bits = 0
        for m in members:
            m = int(m)
            if m < 0:
                raise ValueError(f"node ids must be non-negative, got {m}")
            bits |= 1 << m
        self._bits = bits

    @classmethod
    def from_bits(cls, bits: int) -> "NodeSet":
        if bits < 0:
            raise ValueError("bitmask must be non-negative")
        obj = cls.__new__(cls)
        obj._bits = int(bits)
        return obj

    @classmethod
    def _from_iterable(cls, it):
        return cls(it)

    @classmethod
    def full(cls, n: int) -> "NodeSet":
        return cls.from_bits((1 << n) - 1)

    @classmethod
    def single(cls, i: int) -> "NodeSet":
        return cls.from_bits(1 << i)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(self)

    def __contains__(self, i) -> bool:
        try:
            i = int(i)
        except (TypeError, ValueError):
            return False
        return i >= 0 and bool(self._bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __hash__(self) -> int:
        return hash(self._bits)

    def __eq__(self, other) -> bool:
        if isinstance(other, NodeSet):
            return self._bits == other._bits
        return Set.__eq__(self, other)

    def __ne__(self, other) -> bool:
        return not self == other

    def __or__(self, other: "NodeSet") -> "NodeSet":
        return NodeSet.from_bits(self._bits | _bits_of(other))

    def __and__(self, other: "NodeSet") -> "NodeSet":
        return NodeSet.from_bits(self._bits & _bits_of(other))

    def __sub__(self, other: "NodeSet") -> "NodeSet":
        return NodeSet.from_bits(self._bits & ~_bits_of(other))

    def __xor__(self, other: "NodeSet") -> "NodeSet":
        return NodeSet.from_bits(self._bits ^ _bits_of(other))

    def isdisjoint(self, other) -> bool:
        return not self._bits & _bits_of(other)

    def issubset(self, other) -> bool:
        return not self._bits & ~_bits_of(other)

    def issuperset(self, other) -> bool:
        return not _bits_of(other) & ~self._bits

    def __le__(self, other):
        # subset relation; canonical ordering is exposed through sort_key
        return self.issubset(other)

    def __ge__(self, other):
        return self.issuperset(other)

    def __lt__(self, other):
        return self.issubset(other) and self._bits != _bits_of(other)

    def __gt__(self, other):
        return self.issuperset(other) and self._bits != _bits_of(other)

    def without(self, i: int) -> "NodeSet":
        return NodeSet.from_bits(self._bits & ~(1 << i))

    def with_node(self, i: int) -> "NodeSet":
        return NodeSet.from_bits(self._bits | (1 << i))

    def min(self) -> int:
        if not self._bits:
            raise ValueError("empty NodeSet has no minimum")
        return (self._bits & -self._bits).bit_length() - 1

    def max(self) -> int:
        if not self._bits:
            raise ValueError("empty NodeSet has no maximum")
        return self._bits.bit_length() - 1

    def sort_key(self) -> Tuple[int, ...]:
        return self.members

    def size_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self), self.members)

    def check_range(self, n: int) -> "NodeSet":
        if self._bits >> n:
            raise ValueError(f"{self!r} has members outside 0..{n - 1}")
        return self

    def __repr__(self) -> str:
        return "NodeSet({" + ", ".join(map(str, self)) + "})"

    def __reduce__(self):
        return (NodeSet.from_bits, (self._bits,))


def _bits_of(other) -> int:
    if isinstance(other, NodeSet):
        return other._bits
    return NodeSet(other)._bits


def canonical(sets: Iterable[NodeSet]):
    """Sort NodeSets by their ascending member tuples."""
    return sorted(sets, key=NodeSet.sort_key)
