"""
Counting Oracle - Rollercoaster permutations counted by enumeration.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Optional

from config.settings import get_settings
from core.errors import TooLarge, TooShort
from core.sequence import is_rollercoaster_values

logger = logging.getLogger(__name__)


def _count_with_first(n: int, first: int) -> int:
    rest = [v for v in range(1, n + 1) if v != first]
    total = 0
    for tail in permutations(rest):
        if is_rollercoaster_values((first,) + tail):
            total += 1
    return total


def count_bruteforce(n: int, threads: Optional[int] = None) -> int:
    """Number of rollercoaster permutations of 1..n, by enumerating all n!.

    r(1) = 1 by convention; elsewhere a single element is not a rollercoaster.

    Args:
        n: Permutation size, at most Settings.bruteforce_max_n.
        threads: Worker processes; defaults to Settings.threads.

    Returns:
        r(n).
    """
    settings = get_settings()
    if n < 1:
        raise TooShort(f"count_bruteforce needs n >= 1, got {n}")
    if n > settings.bruteforce_max_n:
        raise TooLarge(f"brute-force counting is limited to n <= {settings.bruteforce_max_n}")
    if n == 1:
        return 1

    workers = min(threads or settings.threads, n)
    if workers <= 1 or n < 7:
        return sum(_count_with_first(n, first) for first in range(1, n + 1))

    logger.debug("enumerating %d! permutations on %d workers", n, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_count_with_first, [n] * n, range(1, n + 1))
        return sum(parts)
