"""
Refine - Turn the two sweep chains into one rollercoaster of length >= ceil(n/2).
"""

import logging
from typing import Iterator, List, Sequence

from core.errors import TooShort
from core.sequence import (
    Rollercoaster,
    SequenceLike,
    as_values,
    ensure_distinct,
    is_rollercoaster_values,
    monotone_triple,
)

from .sweep import MIN_PAIR_LENGTH, PseudoRollercoaster, strip_short_first_run, sweep_pair

logger = logging.getLogger(__name__)


def _is_valid(values: Sequence[int], indices: Sequence[int]) -> bool:
    for s, t in zip(indices, indices[1:]):
        if t <= s:
            return False
    return is_rollercoaster_values([values[i] for i in indices], 3)


def _splice_candidates(r1: List[int], r2: List[int]) -> Iterator[List[int]]:
    """Recombinations around the single shared point of two crossing chains.

    Candidates that are not strictly increasing in position are yielded as
    well; refine_pair rejects them.
    """
    common = set(r1).intersection(r2)
    if len(common) != 1:
        return
    p = next(iter(common))
    r1_left = [q for q in r1 if q < p]
    r1_right = [q for q in r1 if q > p]
    r2_left = [q for q in r2 if q < p]
    r2_right = [q for q in r2 if q > p]

    # Cross over at the shared point: one chain's head with the other's tail.
    yield r2_left + [p] + r1_right
    yield r1_left + [p] + r2_right

    if len(r1) >= 2 and len(r2) >= 2:
        # The other chain's first two points in front of this one's remainder.
        yield [r2[0], r2[1]] + r1[1:]
        yield [r1[0], r1[1]] + r2[1:]
        # Mirror image: the other chain's last two points replace this one's last.
        yield r1[:-1] + [r2[-2], r2[-1]]
        yield r2[:-1] + [r1[-2], r1[-1]]


def refine_pair(r1: Sequence[int], r2: Sequence[int], seq: SequenceLike) -> Rollercoaster:
    """Pick or splice a rollercoaster of length >= ceil(n/2).

    Args:
        r1: First chain after the short-first-run strip (may be empty).
        r2: Second chain after the strip (may be empty).
        seq: Host sequence.

    Returns:
        The first valid candidate reaching ceil(n/2), else the longest valid one.
    """
    values = as_values(seq)
    n = len(values)
    target = (n + 1) // 2
    r1 = list(r1.indices if isinstance(r1, PseudoRollercoaster) else r1)
    r2 = list(r2.indices if isinstance(r2, PseudoRollercoaster) else r2)

    best: List[int] = []
    candidates = [r1, r2]
    if r1 and r2 and len(r1) < target and len(r2) < target:
        candidates.extend(_splice_candidates(r1, r2))

    for candidate in candidates:
        if len(candidate) < 3 or not _is_valid(values, candidate):
            continue
        if len(candidate) >= target:
            return Rollercoaster(tuple(candidate))
        if len(candidate) > len(best):
            best = candidate
    return Rollercoaster(tuple(best))


def _greedy_indices(values: Sequence[int]) -> List[int]:
    r1, r2 = sweep_pair(values)
    s1 = strip_short_first_run(r1, values)
    s2 = strip_short_first_run(r2, values)
    return list(refine_pair(s1, s2, values).indices)


def half_rollercoaster(seq: SequenceLike) -> Rollercoaster:
    """Compute a rollercoaster of length >= ceil(n/2) in linear time.

    For 5 <= n <= 7 a monotone triple is returned instead.

    Args:
        seq: Sequence of n >= 5 distinct values.

    Returns:
        A valid rollercoaster (min_run 3).
    """
    values = as_values(seq)
    n = len(values)
    if n < 5:
        raise TooShort(f"half_rollercoaster needs n >= 5, got {n}")
    ensure_distinct(values)
    if n < MIN_PAIR_LENGTH:
        return monotone_triple(values)

    target = (n + 1) // 2
    found = _greedy_indices(values)
    if len(found) >= target:
        return Rollercoaster(tuple(found))

    logger.warning("refinement reached %d < %d on n=%d, retrying on the reversed sequence",
                   len(found), target, n)
    reversed_found = [n - 1 - q for q in reversed(_greedy_indices(values[::-1]))]
    if len(reversed_found) >= target and _is_valid(values, reversed_found):
        return Rollercoaster(tuple(reversed_found))

    best = max((c for c in (found, reversed_found) if _is_valid(values, c)),
               key=len, default=[])
    logger.warning("returning best rollercoaster of length %d (target %d)", len(best), target)
    return Rollercoaster(tuple(best))
