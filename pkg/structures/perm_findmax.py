"""
Perm FindMax - threshold search over an array of distinct values in {0..n}.

A[l] = x is mirrored as B[x] = l.  The largest l with A[l] > x is the
maximum of B[succ(x)..n], and the largest l with A[l] < x is the maximum
of B[1..pred(x)].
"""

from typing import List, Optional, Sequence

from core.errors import DuplicateValue, IndexOutOfRange

from .aggregate_tree import ABOVE, BELOW, RELATIONS
from .successor import SuccessorDict
from .suffix_max import ReversedSuffixMax, SuffixMaxStructure


class PermFindMax:
    """Drop-in replacement for AggregateSearchTree on permutation inputs.

    Args:
        n: Number of cells and the largest storable value.
        relations: Query directions to support; each one keeps its own
            inverse structure.
    """

    def __init__(self, n: int, relations: Sequence[str] = RELATIONS):
        if n < 1:
            raise IndexOutOfRange(f"PermFindMax needs n >= 1, got {n}")
        unknown = set(relations) - set(RELATIONS)
        if unknown:
            raise ValueError(f"unknown relations: {sorted(unknown)}")
        self.capacity = n
        self.relations = tuple(relations)
        self._a = [0] * (n + 1)
        self._values = SuccessorDict(n)
        self._suffix = SuffixMaxStructure(n) if ABOVE in relations else None
        self._prefix = ReversedSuffixMax(n) if BELOW in relations else None

    def __len__(self) -> int:
        return self.capacity

    def _inverses(self):
        return [s for s in (self._suffix, self._prefix) if s is not None]

    def get(self, l: int) -> Optional[int]:
        if not 1 <= l <= self.capacity:
            raise IndexOutOfRange(f"index {l} outside 1..{self.capacity}")
        return self._a[l] or None

    def cells(self) -> List[Optional[int]]:
        return [v or None for v in self._a[1:]]

    def update(self, l: int, x: Optional[int]) -> None:
        """Set A[l] = x; x of None or 0 clears the cell."""
        if not 1 <= l <= self.capacity:
            raise IndexOutOfRange(f"index {l} outside 1..{self.capacity}")
        x = x or 0
        if not 0 <= x <= self.capacity:
            raise IndexOutOfRange(f"value {x} outside 0..{self.capacity}")
        old = self._a[l]
        if x == old:
            return
        if x and x in self._values:
            raise DuplicateValue(f"value {x} is already stored")

        self._a[l] = x
        if old:
            self._values.delete(old)
        if x:
            self._values.insert(x)
        for inverse in self._inverses():
            if old and x:
                inverse.move(old, x)
            elif old:
                inverse.clear(old)
            else:
                inverse.update(x, l)

    def clear(self, l: int) -> None:
        self.update(l, None)

    def find_largest(self, x: int, rel: str) -> Optional[int]:
        """Largest l with A[l] above/below x, or None."""
        if rel == ABOVE:
            if self._suffix is None:
                raise ValueError("structure was built without the 'above' relation")
            start = self._values.successor(x)
            if start is None:
                return None
            return self._suffix.value(self._suffix.smq(start))
        if rel == BELOW:
            if self._prefix is None:
                raise ValueError("structure was built without the 'below' relation")
            end = self._values.predecessor(x)
            if end is None:
                return None
            return self._prefix.value(self._prefix.pmq(end))
        raise ValueError(f"relation must be one of {RELATIONS}, got {rel!r}")

    @property
    def insertions(self) -> int:
        return sum(s.insertions for s in self._inverses())

    @property
    def deletions(self) -> int:
        return sum(s.deletions for s in self._inverses())
