"""
Increasing - Longest increasing subsequences.
"""

from bisect import bisect_left
from typing import List

from core.sequence import SequenceLike, as_values, ensure_distinct
from structures import BELOW, AggregateSearchTree


def longest_increasing(seq: SequenceLike) -> List[int]:
    """Longest strictly increasing subsequence by patience sorting.

    Args:
        seq: Sequence of distinct values.

    Returns:
        Positions of one longest increasing subsequence.
    """
    values = as_values(seq)
    ensure_distinct(values)
    tails: List[int] = []
    tail_at: List[int] = []
    parent = [-1] * len(values)
    for i, v in enumerate(values):
        pos = bisect_left(tails, v)
        if pos:
            parent[i] = tail_at[pos - 1]
        if pos == len(tails):
            tails.append(v)
            tail_at.append(i)
        else:
            tails[pos] = v
            tail_at[pos] = i

    out: List[int] = []
    cursor = tail_at[-1] if tail_at else -1
    while cursor >= 0:
        out.append(cursor)
        cursor = parent[cursor]
    out.reverse()
    return out


def longest_increasing_via_table(seq: SequenceLike) -> List[int]:
    """Longest increasing subsequence through a single smallest-ending array.

    R[l] holds the smallest value ending an increasing subsequence of
    length l; the next element extends the largest l with R[l] below it.
    """
    values = as_values(seq)
    ensure_distinct(values)
    n = len(values)
    if n == 0:
        return []
    cells = AggregateSearchTree(n)
    owner = {}
    parent = [-1] * n
    best_length, best_at = 0, -1
    for i, v in enumerate(values):
        length = cells.find_largest(v, BELOW) or 0
        if length:
            parent[i] = owner[length]
        current = cells.get(length + 1)
        if current is None or v < current:
            cells.update(length + 1, v)
            owner[length + 1] = i
        if length + 1 > best_length:
            best_length, best_at = length + 1, i

    out: List[int] = []
    cursor = best_at
    while cursor >= 0:
        out.append(cursor)
        cursor = parent[cursor]
    out.reverse()
    return out
