"""
Race Table - The six-array dynamic program behind the longest rollercoaster.

Arrays are indexed by subsequence length l.  R(inc, .) tracks partial
rollercoasters whose last run ascends, R(dec, .) those whose last run
descends; h = 2 means the last run has exactly two points so far.  Each
element is recorded once per array, at its maximal length, and only when
it improves the cell.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from core.errors import DuplicateValue
from structures import ABOVE, BELOW, AggregateSearchTree, PermFindMax

logger = logging.getLogger(__name__)


class ArrayId(Enum):
    """One of the six race arrays, with the extremum it keeps."""
    INC_2 = "R(inc,2)"
    INC_3 = "R(inc,3+)"
    INC_3P = "R(inc,3+')"
    DEC_2 = "R(dec,2)"
    DEC_3 = "R(dec,3+)"
    DEC_3P = "R(dec,3+')"

    @property
    def keeps_smallest(self) -> bool:
        return self in (ArrayId.INC_2, ArrayId.INC_3, ArrayId.DEC_3P)

    @property
    def relation(self) -> str:
        """Direction in which this array is queried."""
        return BELOW if self.keeps_smallest else ABOVE

    @property
    def closes_rollercoaster(self) -> bool:
        return self in (ArrayId.INC_3, ArrayId.INC_3P, ArrayId.DEC_3, ArrayId.DEC_3P)


# Pseudo array for the lone-element start of every chain.
LONE = "lone"


@dataclass(frozen=True)
class WriteRecord:
    """One accepted write; ``parent`` indexes the history log."""
    array: object
    length: int
    value: int
    position: int
    parent: Optional[int]

    def to_dict(self):
        array = self.array.value if isinstance(self.array, ArrayId) else self.array
        return {
            "array": array,
            "length": self.length,
            "value": self.value,
            "position": self.position,
            "parent": self.parent,
        }


class RaceTable:
    """Incremental table over a growing prefix of the sequence.

    Args:
        n: Number of elements that will be processed.
        permutation: Use PermFindMax arrays (values must be 1..n).
    """

    def __init__(self, n: int, permutation: bool = False):
        self.n = n
        self.permutation = permutation
        capacity = max(1, n)
        self.arrays: Dict[ArrayId, object] = {}
        for array in ArrayId:
            if permutation:
                self.arrays[array] = PermFindMax(capacity, relations=(array.relation,))
            else:
                self.arrays[array] = AggregateSearchTree(capacity)
        self.current_write: Dict[ArrayId, Dict[int, int]] = {a: {} for a in ArrayId}
        self.history: List[WriteRecord] = []
        self.prefix_min: Optional[int] = None
        self.prefix_max: Optional[int] = None
        self._min_record: Optional[int] = None
        self._max_record: Optional[int] = None
        self._seen = set()
        self.processed = 0

    def _record(self, array, length: int, value: int, parent: Optional[int]) -> int:
        self.history.append(WriteRecord(array, length, value, self.processed, parent))
        return len(self.history) - 1

    def query(self, array: ArrayId, x: int) -> Tuple[int, Optional[int]]:
        """Largest length whose cell lies on the query side of x, with its record."""
        length = self.arrays[array].find_largest(x, array.relation)
        if length is None:
            return 0, None
        return length, self.current_write[array][length]

    def _offer(self, array: ArrayId, length: int, x: int, parent: Optional[int]) -> bool:
        cells = self.arrays[array]
        current = cells.get(length)
        if current is not None:
            if array.keeps_smallest and x >= current:
                return False
            if not array.keeps_smallest and x <= current:
                return False
        cells.update(length, x)
        self.current_write[array][length] = self._record(array, length, x, parent)
        return True

    @staticmethod
    def _better(a: Tuple[int, Optional[int]], b: Tuple[int, Optional[int]]):
        if a[0] != b[0]:
            return a if a[0] > b[0] else b
        a_at = -1 if a[1] is None else a[1]
        b_at = -1 if b[1] is None else b[1]
        return a if a_at >= b_at else b

    def process(self, x: int) -> None:
        """Apply all six update rules for the next element x."""
        if x in self._seen:
            raise DuplicateValue(f"value {x!r} was already processed")
        self._seen.add(x)

        # Queries first, all against the state before x.
        inc2 = self.query(ArrayId.DEC_3P, x)
        if inc2[0]:
            inc2 = (inc2[0] + 1, inc2[1])
        if self.prefix_min is not None and self.prefix_min < x and inc2[0] < 2:
            inc2 = (2, self._min_record)

        dec2 = self.query(ArrayId.INC_3P, x)
        if dec2[0]:
            dec2 = (dec2[0] + 1, dec2[1])
        if self.prefix_max is not None and self.prefix_max > x and dec2[0] < 2:
            dec2 = (2, self._max_record)

        inc3 = self._better(self.query(ArrayId.INC_2, x), self.query(ArrayId.INC_3, x))
        dec3 = self._better(self.query(ArrayId.DEC_2, x), self.query(ArrayId.DEC_3, x))

        if inc2[0]:
            self._offer(ArrayId.INC_2, inc2[0], x, inc2[1])
        if dec2[0]:
            self._offer(ArrayId.DEC_2, dec2[0], x, dec2[1])
        if inc3[0]:
            self._offer(ArrayId.INC_3, inc3[0] + 1, x, inc3[1])
            self._offer(ArrayId.INC_3P, inc3[0] + 1, x, inc3[1])
        if dec3[0]:
            self._offer(ArrayId.DEC_3, dec3[0] + 1, x, dec3[1])
            self._offer(ArrayId.DEC_3P, dec3[0] + 1, x, dec3[1])

        if self.prefix_min is None or x < self.prefix_min:
            self.prefix_min = x
            self._min_record = self._record(LONE, 1, x, None)
        if self.prefix_max is None or x > self.prefix_max:
            self.prefix_max = x
            self._max_record = self._record(LONE, 1, x, None)
        self.processed += 1

    def best_length(self) -> int:
        """Length of the longest rollercoaster in the processed prefix (0 if none)."""
        return self.best()[0]

    def best(self) -> Tuple[int, Optional[int]]:
        """(length, record) of the best closing cell; ties go to the latest write."""
        best: Tuple[int, Optional[int]] = (0, None)
        for array in ArrayId:
            if not array.closes_rollercoaster:
                continue
            for length, record in self.current_write[array].items():
                best = self._better(best, (length, record))
        return best

    def reconstruct(self, record: int) -> List[int]:
        """Positions of the chain ending at a history record."""
        out: List[int] = []
        cursor: Optional[int] = record
        while cursor is not None:
            entry = self.history[cursor]
            out.append(entry.position)
            cursor = entry.parent
        out.reverse()
        return out

    def cells(self, array: ArrayId) -> List[Optional[int]]:
        return self.arrays[array].cells()


def process_element(table: RaceTable, x: int) -> None:
    """Feed one element to a race table."""
    table.process(x)
