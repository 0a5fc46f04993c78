"""
Search Oracles - Brute-force and quadratic ground truth for the longest rollercoaster.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from config.settings import get_settings
from core.errors import TooLarge
from core.sequence import (
    Direction,
    Rollercoaster,
    SequenceLike,
    as_values,
    ensure_distinct,
    is_rollercoaster_values,
)

logger = logging.getLogger(__name__)

# (direction of the last run, points in it capped at 3)
State = Tuple[Direction, int]


def longest_exhaustive(seq: SequenceLike) -> int:
    """Maximum rollercoaster length over all subsequences (0 if none).

    Raises:
        TooLarge: n exceeds Settings.exhaustive_max_n.
    """
    values = as_values(seq)
    n = len(values)
    limit = get_settings().exhaustive_max_n
    if n > limit:
        raise TooLarge(f"exhaustive search is limited to n <= {limit}, got {n}")
    ensure_distinct(values)
    for size in range(n, 2, -1):
        for chosen in combinations(range(n), size):
            if is_rollercoaster_values([values[i] for i in chosen]):
                return size
    return 0


def longest_quadratic_dp(seq: SequenceLike) -> Optional[Rollercoaster]:
    """Longest rollercoaster by an O(n^2) dynamic program over end states.

    Each position j keeps, per state (last-run direction, run length
    capped at 3), the longest chain ending there and the predecessor it
    came from.
    """
    values = as_values(seq)
    ensure_distinct(values)
    n = len(values)
    best: List[Dict[State, Tuple[int, Optional[Tuple[int, Optional[State]]]]]] = [
        {} for _ in range(n)
    ]

    def offer(j: int, state: State, length: int, parent) -> None:
        current = best[j].get(state)
        if current is None or length > current[0]:
            best[j][state] = (length, parent)

    for j in range(n):
        for i in range(j):
            up = values[j] > values[i]
            same = Direction.ASCENDING if up else Direction.DESCENDING
            other = same.opposite
            # Lone element i starts a two-point run.
            offer(j, (same, 2), 2, (i, None))
            if (same, 2) in best[i]:
                offer(j, (same, 3), best[i][(same, 2)][0] + 1, (i, (same, 2)))
            if (same, 3) in best[i]:
                offer(j, (same, 3), best[i][(same, 3)][0] + 1, (i, (same, 3)))
            if (other, 3) in best[i]:
                offer(j, (same, 2), best[i][(other, 3)][0] + 1, (i, (other, 3)))

    top = None
    for j in range(n):
        for direction in Direction:
            entry = best[j].get((direction, 3))
            if entry and (top is None or entry[0] > top[0]):
                top = (entry[0], j, (direction, 3))
    if top is None:
        return None

    _, j, state = top
    out = []
    while True:
        out.append(j)
        if state is None:
            break
        _, parent = best[j][state]
        j, state = parent
    out.reverse()
    return Rollercoaster(tuple(out))
