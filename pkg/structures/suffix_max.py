"""
Suffix Max - suffix maximum queries over an array of distinct small integers.

B[1..n] holds values in {0..n} where 0 marks an empty cell.  The
positions of the suffix maxima form the list L = (i_1 < ... < i_k) with
strictly decreasing values; i_k = n always.  A query for the maximum of
B[l..n] is the successor of l in L.
"""

import logging
from typing import Dict, List

from core.errors import AllEmpty, DuplicateValue, IndexOutOfRange, InvalidIndices

from .successor import SuccessorDict

logger = logging.getLogger(__name__)


class SuffixMaxStructure:
    """Suffix maximum structure with amortized O(log log n) operations.

    Args:
        n: Number of positions.
    """

    def __init__(self, n: int):
        if n < 1:
            raise IndexOutOfRange(f"suffix max structure needs n >= 1, got {n}")
        self.n = n
        self._b = [0] * (n + 1)
        self._where: Dict[int, int] = {}
        self._prev = [0] * (n + 1)
        self._next = [0] * (n + 1)
        self._index = SuccessorDict(n)
        self.insertions = 0
        self.deletions = 0
        self._link(n, 0, 0)

    def _check(self, l: int) -> None:
        if not 1 <= l <= self.n:
            raise IndexOutOfRange(f"position {l} outside 1..{self.n}")

    def _link(self, pos: int, before: int, after: int) -> None:
        self._index.insert(pos)
        self._prev[pos] = before
        self._next[pos] = after
        if before:
            self._next[before] = pos
        if after:
            self._prev[after] = pos
        self.insertions += 1

    def _unlink(self, pos: int) -> None:
        before, after = self._prev[pos], self._next[pos]
        if before:
            self._next[before] = after
        if after:
            self._prev[after] = before
        self._prev[pos] = self._next[pos] = 0
        self._index.delete(pos)
        self.deletions += 1

    def value(self, l: int) -> int:
        self._check(l)
        return self._b[l]

    def values(self) -> List[int]:
        """B[1..n]."""
        return self._b[1:]

    def chain(self) -> List[int]:
        """Positions currently in L, in increasing order."""
        out = []
        pos = self._index.min()
        while pos:
            out.append(pos)
            pos = self._next[pos]
        return out

    def smq(self, l: int) -> int:
        """Position of the largest element of B[l..n]."""
        self._check(l)
        pos = self._index.ceiling(l)
        if self._b[pos] == 0:
            raise AllEmpty(f"B[{l}..{self.n}] is empty")
        return pos

    def _raise_to(self, pos: int, x: int) -> None:
        if pos not in self._index:
            after = self._index.successor(pos)
            if self._b[after] > x:
                return
            self._link(pos, self._prev[after], after)
        p = self._prev[pos]
        while p and self._b[p] < x:
            before = self._prev[p]
            self._unlink(p)
            p = before

    def update(self, l: int, x: int) -> None:
        """Set B[l] = x for a value x not currently stored."""
        self._check(l)
        if x < 1:
            raise IndexOutOfRange(f"value must be >= 1, got {x}")
        if x in self._where:
            raise DuplicateValue(f"value {x} already stored at {self._where[x]}")
        if self._b[l]:
            self.clear(l)
        self._b[l] = x
        self._where[x] = l
        self._raise_to(l, x)

    def clear(self, l: int) -> None:
        """Set B[l] = 0, rescanning the gap in front of l if it was a suffix maximum."""
        self._check(l)
        x = self._b[l]
        if not x:
            return
        self._b[l] = 0
        del self._where[x]
        if l not in self._index:
            return

        lo = self._prev[l]
        if l == self.n:
            after, running = l, 0
        else:
            after = self._next[l]
            self._unlink(l)
            running = self._b[after]
        found = []
        for q in range(l - 1, lo, -1):
            if self._b[q] > running:
                found.append(q)
                running = self._b[q]
        for q in found:
            self._link(q, lo, after)
            after = q

    def move(self, src: int, dst: int) -> None:
        """Move the value at ``src`` to the empty cell ``dst``.

        Moving towards the end never needs a rescan: the old position is
        dominated by the new one.
        """
        self._check(src)
        self._check(dst)
        x = self._b[src]
        if not x:
            raise AllEmpty(f"position {src} is empty")
        if self._b[dst]:
            raise InvalidIndices(f"position {dst} is occupied")
        if dst > src:
            self._b[dst] = x
            self._where[x] = dst
            self._raise_to(dst, x)
            self._b[src] = 0
            if src in self._index:
                self._unlink(src)
        else:
            self.clear(src)
            self.update(dst, x)


class ReversedSuffixMax:
    """Prefix maximum queries through a SuffixMaxStructure on mirrored positions."""

    def __init__(self, n: int):
        self.n = n
        self._inner = SuffixMaxStructure(n)

    def _mirror(self, l: int) -> int:
        return self.n + 1 - l

    @property
    def insertions(self) -> int:
        return self._inner.insertions

    @property
    def deletions(self) -> int:
        return self._inner.deletions

    def value(self, l: int) -> int:
        return self._inner.value(self._mirror(l))

    def pmq(self, r: int) -> int:
        """Position of the largest element of B[1..r]."""
        if not 1 <= r <= self.n:
            raise IndexOutOfRange(f"position {r} outside 1..{self.n}")
        return self._mirror(self._inner.smq(self._mirror(r)))

    def update(self, l: int, x: int) -> None:
        self._inner.update(self._mirror(l), x)

    def clear(self, l: int) -> None:
        self._inner.clear(self._mirror(l))

    def move(self, src: int, dst: int) -> None:
        self._inner.move(self._mirror(src), self._mirror(dst))
