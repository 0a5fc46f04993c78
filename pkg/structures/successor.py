"""
Successor - van Emde Boas dictionary over a bounded integer universe.

Clusters of at most 64 keys are single machine-word bitmasks; larger
universes split into sqrt-sized clusters with a summary structure and
keep their minimum out of the clusters.
"""

from typing import Dict, Iterator, Optional

from core.errors import IndexOutOfRange

LEAF_BITS = 6
LEAF_SIZE = 1 << LEAF_BITS


class _Leaf:
    """Bitmask set over {0..63}."""

    __slots__ = ("bits",)

    def __init__(self):
        self.bits = 0

    def is_empty(self) -> bool:
        return self.bits == 0

    def minimum(self) -> Optional[int]:
        if not self.bits:
            return None
        return (self.bits & -self.bits).bit_length() - 1

    def maximum(self) -> Optional[int]:
        if not self.bits:
            return None
        return self.bits.bit_length() - 1

    def contains(self, x: int) -> bool:
        return (self.bits >> x) & 1 == 1

    def insert(self, x: int) -> None:
        self.bits |= 1 << x

    def delete(self, x: int) -> None:
        self.bits &= ~(1 << x)

    def successor(self, x: int) -> Optional[int]:
        rest = self.bits >> (x + 1)
        if not rest:
            return None
        return x + 1 + (rest & -rest).bit_length() - 1

    def predecessor(self, x: int) -> Optional[int]:
        below = self.bits & ((1 << x) - 1)
        if not below:
            return None
        return below.bit_length() - 1


class _Node:
    """Recursive vEB node over a universe of 2**bits keys."""

    __slots__ = ("low_bits", "min", "max", "summary", "clusters", "child_bits")

    def __init__(self, bits: int):
        self.child_bits = bits // 2
        self.low_bits = bits - self.child_bits
        self.min: Optional[int] = None
        self.max: Optional[int] = None
        self.summary = _make(self.child_bits)
        self.clusters: Dict[int, object] = {}

    def is_empty(self) -> bool:
        return self.min is None

    def minimum(self) -> Optional[int]:
        return self.min

    def maximum(self) -> Optional[int]:
        return self.max

    def _split(self, x: int):
        return x >> self.low_bits, x & ((1 << self.low_bits) - 1)

    def _join(self, high: int, low: int) -> int:
        return (high << self.low_bits) | low

    def contains(self, x: int) -> bool:
        if x == self.min or x == self.max:
            return True
        if self.min is None:
            return False
        high, low = self._split(x)
        cluster = self.clusters.get(high)
        return cluster is not None and cluster.contains(low)

    def insert(self, x: int) -> None:
        if self.min is None:
            self.min = self.max = x
            return
        if x < self.min:
            x, self.min = self.min, x
        if x > self.max:
            self.max = x
        if x == self.min:
            return
        high, low = self._split(x)
        cluster = self.clusters.get(high)
        if cluster is None:
            cluster = _make(self.low_bits)
            self.clusters[high] = cluster
            self.summary.insert(high)
        cluster.insert(low)

    def delete(self, x: int) -> None:
        if self.min == self.max:
            self.min = self.max = None
            return
        if x == self.min:
            first = self.summary.minimum()
            x = self._join(first, self.clusters[first].minimum())
            self.min = x
        high, low = self._split(x)
        cluster = self.clusters[high]
        cluster.delete(low)
        if cluster.is_empty():
            del self.clusters[high]
            self.summary.delete(high)
            if x == self.max:
                top = self.summary.maximum()
                if top is None:
                    self.max = self.min
                else:
                    self.max = self._join(top, self.clusters[top].maximum())
        elif x == self.max:
            self.max = self._join(high, cluster.maximum())

    def successor(self, x: int) -> Optional[int]:
        if self.min is not None and x < self.min:
            return self.min
        high, low = self._split(x)
        cluster = self.clusters.get(high)
        if cluster is not None and low < cluster.maximum():
            return self._join(high, cluster.successor(low))
        nxt = self.summary.successor(high)
        if nxt is None:
            return None
        return self._join(nxt, self.clusters[nxt].minimum())

    def predecessor(self, x: int) -> Optional[int]:
        if self.max is not None and x > self.max:
            return self.max
        high, low = self._split(x)
        cluster = self.clusters.get(high)
        if cluster is not None and low > cluster.minimum():
            return self._join(high, cluster.predecessor(low))
        prev = self.summary.predecessor(high)
        if prev is None:
            if self.min is not None and x > self.min:
                return self.min
            return None
        return self._join(prev, self.clusters[prev].maximum())


def _make(bits: int):
    if bits <= LEAF_BITS:
        return _Leaf()
    return _Node(bits)


class SuccessorDict:
    """Ordered integer set over {0..u} with O(log log u) operations.

    Args:
        universe: Largest key that may be stored; the capacity is rounded
            up to a power of two.
    """

    def __init__(self, universe: int):
        if universe < 0:
            raise IndexOutOfRange(f"universe must be >= 0, got {universe}")
        self.universe = universe
        self.bits = max(1, universe.bit_length())
        self._root = _make(self.bits)
        self._size = 0

    def _check(self, x: int) -> None:
        if x < 0 or x > self.universe:
            raise IndexOutOfRange(f"key {x} outside 0..{self.universe}")

    def __len__(self) -> int:
        return self._size

    def __contains__(self, x: int) -> bool:
        if x < 0 or x > self.universe:
            return False
        return self._root.contains(x)

    def __iter__(self) -> Iterator[int]:
        x = self.min()
        while x is not None:
            yield x
            x = self.successor(x)

    def insert(self, x: int) -> bool:
        """Insert ``x``; returns False if it was already present."""
        self._check(x)
        if self._root.contains(x):
            return False
        self._root.insert(x)
        self._size += 1
        return True

    def delete(self, x: int) -> bool:
        """Delete ``x``; returns False if it was absent."""
        self._check(x)
        if not self._root.contains(x):
            return False
        self._root.delete(x)
        self._size -= 1
        return True

    def min(self) -> Optional[int]:
        return self._root.minimum()

    def max(self) -> Optional[int]:
        return self._root.maximum()

    def successor(self, x: int) -> Optional[int]:
        """Smallest member strictly greater than ``x``."""
        if x < 0:
            return self.min()
        if x >= self.universe:
            return None
        return self._root.successor(x)

    def predecessor(self, x: int) -> Optional[int]:
        """Largest member strictly smaller than ``x``."""
        if x > self.universe:
            return self.max()
        if x <= 0:
            return None
        return self._root.predecessor(x)

    def ceiling(self, x: int) -> Optional[int]:
        """Smallest member >= ``x``."""
        return self.successor(x - 1)

    def floor(self, x: int) -> Optional[int]:
        """Largest member <= ``x``."""
        return self.predecessor(x + 1)
