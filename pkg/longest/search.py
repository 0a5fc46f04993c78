"""
Search - Exact longest rollercoaster in O(n log n), or O(n log log n) on permutations.
"""

import logging
from typing import List, Optional

import numpy as np

from core.errors import NotAPermutation
from core.sequence import Rollercoaster, SequenceLike, as_values, ensure_distinct

from .race_table import RaceTable

logger = logging.getLogger(__name__)


def normalize_to_permutation(seq: SequenceLike) -> List[int]:
    """Replace each value by its rank in 1..n.

    Args:
        seq: Distinct integers.

    Returns:
        Order-isomorphic permutation of 1..n.
    """
    values = as_values(seq)
    ensure_distinct(values)
    if not values:
        return []
    order = np.argsort(np.asarray(values), kind="stable")
    ranks = np.empty(len(values), dtype=np.int64)
    ranks[order] = np.arange(1, len(values) + 1)
    return [int(r) for r in ranks]


def is_permutation(values) -> bool:
    n = len(values)
    return sorted(values) == list(range(1, n + 1))


def _run_table(values, permutation: bool) -> Optional[Rollercoaster]:
    table = RaceTable(len(values), permutation=permutation)
    for x in values:
        table.process(x)
    length, record = table.best()
    logger.debug("race table: n=%d, %d writes, best length %d",
                 len(values), len(table.history), length)
    if record is None:
        return None
    return Rollercoaster(tuple(table.reconstruct(record)))


def longest_rollercoaster(seq: SequenceLike) -> Optional[Rollercoaster]:
    """Longest rollercoaster of a sequence of distinct values.

    Returns:
        A longest rollercoaster, or None when none of length >= 3 exists.
    """
    values = as_values(seq)
    ensure_distinct(values)
    if len(values) < 3:
        return None
    return _run_table(values, permutation=False)


def longest_rollercoaster_perm(perm: SequenceLike) -> Optional[Rollercoaster]:
    """Longest rollercoaster of a permutation of 1..n using PermFindMax arrays."""
    values = as_values(perm)
    if not is_permutation(values):
        raise NotAPermutation("input must be a permutation of 1..n")
    if len(values) < 3:
        return None
    return _run_table(values, permutation=True)
