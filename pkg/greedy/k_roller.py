"""
K-Roller - k-rollercoasters with the n/(2(k-1)) - 3k/2 length guarantee.

Each iteration sweeps the shortest window that holds both a k-ascent and
a k-descent, then appends the window's longest descending chain to the
ascent-ended chain and its longest ascending chain to the descent-ended
one.
"""

import logging
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from core.errors import BadK, EmptyWindow, TooShort
from core.sequence import (
    Rollercoaster,
    SequenceLike,
    as_values,
    ensure_distinct,
    is_rollercoaster_values,
    run_lengths,
)

logger = logging.getLogger(__name__)

MIN_K = 4


@dataclass(frozen=True)
class KSweepState:
    """Statistics of one sweep iteration."""
    m: int
    alpha: int
    ascent_length: int
    descent_length: int
    last: bool = False

    def to_dict(self):
        return {
            "m": self.m,
            "alpha": self.alpha,
            "ascent_length": self.ascent_length,
            "descent_length": self.descent_length,
            "last": self.last,
        }


@dataclass
class KRollerResult:
    """Outcome of the k-rollercoaster sweep."""
    rollercoaster: Rollercoaster
    k: int
    n: int
    r1_length: int
    r2_length: int
    states: List[KSweepState] = field(default_factory=list)

    @property
    def guaranteed_bound(self) -> float:
        return self.n / (2 * (self.k - 1)) - 3 * self.k / 2

    @property
    def sharper_bound(self) -> float:
        return self.n / (2 * (self.k - 1)) - 3 * (self.k - 1) / 2

    def to_dict(self):
        return {
            "indices": list(self.rollercoaster.indices),
            "length": len(self.rollercoaster),
            "k": self.k,
            "n": self.n,
            "r1_length": self.r1_length,
            "r2_length": self.r2_length,
            "guaranteed_bound": self.guaranteed_bound,
            "sharper_bound": self.sharper_bound,
            "states": [s.to_dict() for s in self.states],
        }


def _smallest_longest_increasing(values: Sequence[int]) -> List[int]:
    """Lexicographically smallest index set of a longest increasing subsequence."""
    m = len(values)
    starting = [0] * m
    tails: List[int] = []
    # Longest increasing run starting at t == LIS ending at t in the
    # reversed, negated sequence.
    for t in range(m - 1, -1, -1):
        u = -values[t]
        pos = bisect_left(tails, u)
        if pos == len(tails):
            tails.append(u)
        else:
            tails[pos] = u
        starting[t] = pos + 1

    need = len(tails)
    out: List[int] = []
    last = None
    for t in range(m):
        if need == 0:
            break
        if starting[t] == need and (last is None or values[t] > last):
            out.append(t)
            last = values[t]
            need -= 1
    return out


def longest_monotone(window: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Longest increasing and longest decreasing subsequences of a window.

    Args:
        window: Values of the swept points.

    Returns:
        (ascending, descending) as positions into ``window``; ties are
        broken towards the lexicographically smallest position list.
    """
    if len(window) == 0:
        raise EmptyWindow("longest_monotone needs a nonempty window")
    ascending = _smallest_longest_increasing(window)
    descending = _smallest_longest_increasing([-v for v in window])
    return ascending, descending


def _strip_first_run(chain: List[int], values: Sequence[int], k: int) -> List[int]:
    lengths = run_lengths([values[i] for i in chain])
    if lengths and lengths[0] < k:
        chain = chain[lengths[0] - 1:]
    if not is_rollercoaster_values([values[i] for i in chain], k):
        return []
    return chain


def _closes_run(chain: List[int], addition: List[int], values: Sequence[int], k: int) -> bool:
    lengths = run_lengths([values[chain[-1]]] + [values[i] for i in addition])
    return bool(lengths) and lengths[-1] >= k


def _alpha(m: int, k: int) -> int:
    """Smallest alpha with m - 1 <= alpha (k - 1)."""
    return max(1, math.ceil((m - 1) / (k - 1)))


def k_sweep(seq: SequenceLike, k: int) -> KRollerResult:
    """Run the k-rollercoaster sweep and keep per-iteration statistics.

    A trailing window that never reaches k-runs both ways is added through
    its longer monotone chain when it has more than (k-1)^2 points.  Shorter
    trailing windows are dropped, unless the chain together with the end of
    the chain it would join forms a final run of at least k points; an
    increasing sequence of (k-1)^2 + 1 values thus comes back whole.

    Args:
        seq: Sequence of n >= (k-1)^2 + 1 distinct values.
        k: Minimum run length, at least 4.

    Returns:
        KRollerResult with the longer of the two chains.
    """
    if k < MIN_K:
        raise BadK(f"k must be >= {MIN_K}, got {k}")
    values = as_values(seq)
    n = len(values)
    if n <= (k - 1) ** 2:
        raise TooShort(f"k={k} needs n >= {(k - 1) ** 2 + 1}, got {n}")
    ensure_distinct(values)

    r1: List[int] = [0]
    r2: List[int] = [0]
    r_a, r_d = r1, r2
    states: List[KSweepState] = []
    i = 1
    while i < n:
        inc_tails: List[int] = []
        dec_tails: List[int] = []
        stop = -1
        for t in range(i, n):
            v = values[t]
            pos = bisect_left(inc_tails, v)
            if pos == len(inc_tails):
                inc_tails.append(v)
            else:
                inc_tails[pos] = v
            pos = bisect_left(dec_tails, -v)
            if pos == len(dec_tails):
                dec_tails.append(-v)
            else:
                dec_tails[pos] = -v
            if len(inc_tails) >= k and len(dec_tails) >= k:
                stop = t
                break

        if stop < 0:
            m = n - i
            window = values[i:]
            ascending, descending = longest_monotone(window)
            states.append(KSweepState(m, _alpha(m, k), len(ascending), len(descending), last=True))
            if len(ascending) >= len(descending):
                target, chain = r_d, [i + t for t in ascending]
            else:
                target, chain = r_a, [i + t for t in descending]
            # Short leftovers are kept only when they still close a k-run.
            if m > (k - 1) ** 2 or _closes_run(target, chain, values, k):
                target.extend(chain)
            else:
                logger.debug("discarding %d trailing points", m)
            break

        window = values[i:stop + 1]
        m = len(window)
        ascending, descending = longest_monotone(window)
        states.append(KSweepState(m, _alpha(m, k), len(ascending), len(descending)))
        logger.debug("k-window [%d, %d]: m=%d |A|=%d |D|=%d",
                     i, stop, m, len(ascending), len(descending))
        r_a.extend(i + t for t in descending)
        r_d.extend(i + t for t in ascending)
        r_a, r_d = r_d, r_a
        i = stop + 1

    s1 = _strip_first_run(r1, values, k)
    s2 = _strip_first_run(r2, values, k)
    chosen = s1 if len(s1) >= len(s2) else s2
    result = KRollerResult(Rollercoaster(tuple(chosen), min_run=k), k, n, len(s1), len(s2), states)
    logger.debug("k=%d n=%d: length %d, guaranteed bound %.2f, sharper bound %.2f",
                 k, n, len(chosen), result.guaranteed_bound, result.sharper_bound)
    return result


def k_rollercoaster(seq: SequenceLike, k: int) -> Rollercoaster:
    """Compute a k-rollercoaster of length >= n/(2(k-1)) - 3k/2."""
    return k_sweep(seq, k).rollercoaster
