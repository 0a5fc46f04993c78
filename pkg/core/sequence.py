"""
Sequence - Core types for sequences, runs and rollercoasters.

A rollercoaster is a subsequence in which every maximal monotone run
(adjacent runs share their turning element) has at least ``min_run``
elements.  Index lists are 0-based positions into the host sequence;
point sets use 1-based x-coordinates.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import DuplicateValue, InvalidIndices, TooShort


class Direction(Enum):
    """Direction of a run."""
    ASCENDING = "asc"
    DESCENDING = "desc"

    @property
    def opposite(self) -> "Direction":
        if self is Direction.ASCENDING:
            return Direction.DESCENDING
        return Direction.ASCENDING


@dataclass(frozen=True)
class NumberSequence:
    """An ordered list of pairwise distinct numbers."""
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        ensure_distinct(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


SequenceLike = Union[NumberSequence, Sequence[int]]


@dataclass(frozen=True)
class PointSet:
    """Plane translation of a sequence: point i is (i, s_i) with i 1-based."""
    points: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class Run:
    """A maximal monotone block of a subsequence.

    ``start`` and ``end`` are positions into the subsequence (inclusive).
    """
    direction: Direction
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def to_dict(self):
        return {
            "direction": self.direction.value,
            "start": self.start,
            "end": self.end,
            "length": self.length,
        }


@dataclass(frozen=True)
class Rollercoaster:
    """Strictly increasing positions into a host sequence."""
    indices: Tuple[int, ...]
    min_run: int = 3

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def values(self, seq: SequenceLike) -> List[int]:
        vals = as_values(seq)
        return [vals[i] for i in self.indices]

    def to_dict(self):
        return {"indices": list(self.indices), "length": len(self.indices),
                "min_run": self.min_run}


def as_values(seq: SequenceLike) -> Sequence[int]:
    """Return the raw value sequence behind ``seq``."""
    if isinstance(seq, NumberSequence):
        return seq.values
    return seq


def ensure_distinct(values: Iterable) -> None:
    """Raise DuplicateValue if any value repeats."""
    seen = set()
    for v in values:
        if v in seen:
            raise DuplicateValue(f"value {v!r} occurs more than once")
        seen.add(v)


def check_indices(indices: Sequence[int], n: int) -> None:
    """Raise InvalidIndices unless indices are strictly increasing within [0, n)."""
    prev = -1
    for i in indices:
        if not isinstance(i, int) or isinstance(i, bool):
            raise InvalidIndices(f"index {i!r} is not an integer")
        if i < 0 or i >= n:
            raise InvalidIndices(f"index {i} out of bounds for length {n}")
        if i <= prev:
            raise InvalidIndices(f"indices not strictly increasing at {i}")
        prev = i


def run_lengths(values: Sequence[int]) -> List[int]:
    """Lengths of the maximal runs of ``values`` (empty for fewer than 2 values)."""
    lengths: List[int] = []
    if len(values) < 2:
        return lengths
    current = 2
    rising = values[1] > values[0]
    for t in range(2, len(values)):
        up = values[t] > values[t - 1]
        if up == rising:
            current += 1
        else:
            lengths.append(current)
            current = 2
            rising = up
    lengths.append(current)
    return lengths


def is_rollercoaster_values(values: Sequence[int], min_run: int = 3) -> bool:
    """True iff ``values`` has length >= min_run and all runs >= min_run."""
    if len(values) < min_run:
        return False
    return all(length >= min_run for length in run_lengths(values))


def validate(seq: SequenceLike, indices: Sequence[int], min_run: int = 3) -> bool:
    """Check that ``indices`` select a rollercoaster of ``seq``.

    Args:
        seq: Host sequence.
        indices: Strictly increasing 0-based positions.
        min_run: Minimum number of elements per run.

    Returns:
        True if every run of the induced subsequence has >= min_run elements
        and the subsequence itself is at least min_run long.
    """
    values = as_values(seq)
    check_indices(indices, len(values))
    return is_rollercoaster_values([values[i] for i in indices], min_run)


def decompose_runs(seq: SequenceLike, indices: Optional[Sequence[int]] = None) -> List[Run]:
    """Split the induced subsequence into maximal runs.

    Args:
        seq: Host sequence.
        indices: Positions to take (all positions when omitted).

    Returns:
        Runs with ``start``/``end`` as positions into ``indices``;
        consecutive runs share their boundary position.
    """
    values = as_values(seq)
    if indices is None:
        indices = range(len(values))
    check_indices(indices, len(values))
    sub = [values[i] for i in indices]
    runs: List[Run] = []
    start = 0
    for length in run_lengths(sub):
        end = start + length - 1
        direction = Direction.ASCENDING if sub[end] > sub[start] else Direction.DESCENDING
        runs.append(Run(direction, start, end))
        start = end
    return runs


def flatten_runs(indices: Sequence[int], runs: Sequence[Run]) -> List[int]:
    """Rebuild the index list covered by ``runs`` (shared boundaries once)."""
    if not runs:
        return list(indices)
    out = [indices[runs[0].start]]
    for run in runs:
        out.extend(indices[run.start + 1:run.end + 1])
    return out


def to_points(seq: SequenceLike) -> PointSet:
    """Translate s_1..s_n into points (i, s_i), i starting at 1."""
    values = as_values(seq)
    ensure_distinct(values)
    return PointSet(tuple((i + 1, v) for i, v in enumerate(values)))


def monotone_triple(seq: SequenceLike) -> Rollercoaster:
    """Return a monotone subsequence of three elements (n >= 5 guarantees one).

    The middle element is the leftmost position that has a smaller element
    before it and a larger one after it (or the mirrored condition).
    """
    values = as_values(seq)
    n = len(values)
    if n < 5:
        raise TooShort(f"monotone_triple needs n >= 5, got {n}")
    ensure_distinct(values)

    suffix_max = [0] * n
    suffix_min = [0] * n
    suffix_max[-1] = suffix_min[-1] = values[-1]
    for t in range(n - 2, -1, -1):
        suffix_max[t] = max(values[t], suffix_max[t + 1])
        suffix_min[t] = min(values[t], suffix_min[t + 1])

    lo = hi = 0
    for m in range(1, n - 1):
        v = values[m]
        if values[lo] < v < suffix_max[m + 1]:
            k = next(t for t in range(m + 1, n) if values[t] > v)
            return Rollercoaster((lo, m, k))
        if values[hi] > v > suffix_min[m + 1]:
            k = next(t for t in range(m + 1, n) if values[t] < v)
            return Rollercoaster((hi, m, k))
        if v < values[lo]:
            lo = m
        if v > values[hi]:
            hi = m
    # Unreachable for distinct values with n >= 5.
    raise TooShort("no monotone triple found")
