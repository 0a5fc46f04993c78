"""
Aggregate Tree - complete binary tree of per-subtree minima and maxima.

Answers "largest index l with A[l] > x" and "largest index l with
A[l] < x" under arbitrary cell rewrites in O(log n).
"""

from typing import List, Optional

from core.errors import IndexOutOfRange

ABOVE = "above"
BELOW = "below"
RELATIONS = (ABOVE, BELOW)

# Empty cells are None in both aggregates.
EMPTY = None


class AggregateSearchTree:
    """Array A[1..n] with largest-index threshold search.

    Args:
        capacity: Number of cells n.
    """

    def __init__(self, capacity: int):
        if capacity < 0:
            raise IndexOutOfRange(f"capacity must be >= 0, got {capacity}")
        self.capacity = capacity
        size = 1
        while size < max(1, capacity):
            size *= 2
        self._size = size
        self._min: List[Optional[int]] = [EMPTY] * (2 * size)
        self._max: List[Optional[int]] = [EMPTY] * (2 * size)

    def __len__(self) -> int:
        return self.capacity

    def _check(self, l: int) -> None:
        if not 1 <= l <= self.capacity:
            raise IndexOutOfRange(f"index {l} outside 1..{self.capacity}")

    def get(self, l: int) -> Optional[int]:
        self._check(l)
        return self._min[self._size + l - 1]

    def cells(self) -> List[Optional[int]]:
        """Current A[1..n] as a list (None marks EMPTY)."""
        return self._min[self._size:self._size + self.capacity]

    def update(self, l: int, x: Optional[int]) -> None:
        """Set A[l] = x; passing None empties the cell."""
        self._check(l)
        node = self._size + l - 1
        self._min[node] = x
        self._max[node] = x
        node //= 2
        while node:
            left, right = 2 * node, 2 * node + 1
            self._min[node] = _pick(min, self._min[left], self._min[right])
            self._max[node] = _pick(max, self._max[left], self._max[right])
            node //= 2

    def clear(self, l: int) -> None:
        self.update(l, EMPTY)

    def _matches(self, node: int, x: int, rel: str) -> bool:
        if rel == ABOVE:
            top = self._max[node]
            return top is not None and top > x
        low = self._min[node]
        return low is not None and low < x

    def find_largest(self, x: int, rel: str) -> Optional[int]:
        """Largest l with A[l] above/below x, or None."""
        if rel not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {rel!r}")
        if self.capacity == 0 or not self._matches(1, x, rel):
            return None
        node = 1
        while node < self._size:
            right = 2 * node + 1
            node = right if self._matches(right, x, rel) else 2 * node
        return node - self._size + 1


def _pick(fn, a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return fn(a, b)
