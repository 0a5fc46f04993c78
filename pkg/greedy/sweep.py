"""
Sweep - Linear-time construction of two pseudo-rollercoasters.

A vertical sweep keeps two index chains, one whose last run ascends and
one whose last run descends.  Each iteration either extends one of them
with the next point or splits the swept window into two ascending chains
and closes it with the first descending triple.  Mirrored windows are
handled by running the canonical case on the negated values.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import InvalidIndices, TooShort, WindowExhausted
from core.sequence import SequenceLike, as_values, ensure_distinct

logger = logging.getLogger(__name__)

MIN_PAIR_LENGTH = 8


@dataclass(frozen=True)
class PseudoRollercoaster:
    """Index chain whose runs all have >= 3 points except possibly the first."""
    indices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


@dataclass(frozen=True)
class SweepState:
    """Snapshot taken at an iteration boundary."""
    r_a: Tuple[int, ...]
    r_d: Tuple[int, ...]
    frontier: int

    @property
    def a(self) -> int:
        return self.r_a[-1]

    @property
    def d(self) -> int:
        return self.r_d[-1]


@dataclass
class TwoChainSplit:
    """Partition of a swept window into two ascending chains.

    ``a1`` starts at the upper endpoint a, ``a2`` starts at the lower
    endpoint d followed by p_i.  ``triple`` is (k'', k', k), the first
    descending triple, or None when the window ran out.
    """
    a1: List[int]
    a2: List[int]
    pred: Dict[int, int]
    triple: Optional[Tuple[int, int, int]] = None
    end: int = -1

    def to_dict(self):
        return {
            "a1": list(self.a1),
            "a2": list(self.a2),
            "pred": dict(self.pred),
            "triple": list(self.triple) if self.triple else None,
            "end": self.end,
        }


def two_chain_split(values: Sequence[int], start: int, a: int, d: int) -> TwoChainSplit:
    """Split the window starting at ``start`` into two ascending chains.

    Args:
        values: Values in canonical orientation (callers negate for the
            mirrored case).
        start: Position i of the first swept point, with d < p_i < a and
            p_{i+1} > p_i.
        a: Position of the upper chain endpoint.
        d: Position of the lower chain endpoint.

    Returns:
        TwoChainSplit closed by the first descending triple.

    Raises:
        WindowExhausted: no descending triple exists before the end; the
            partial split is attached as ``exc.split``.
    """
    n = len(values)
    if not (0 <= d < start and 0 <= a < start and start < n):
        raise InvalidIndices(f"bad window start={start} a={a} d={d}")
    if not values[d] < values[start] < values[a]:
        raise InvalidIndices("window must start strictly between d and a")

    a1 = [a]
    a2 = [d, start]
    pred = {start: a}
    r1, r2 = a, start
    for p in range(start + 1, n):
        v = values[p]
        if v > values[r1]:
            a1.append(p)
            r1 = p
        elif v > values[r2]:
            a2.append(p)
            pred[p] = r1
            r2 = p
        else:
            return TwoChainSplit(a1, a2, pred, (pred[r2], r2, p), p)

    exc = WindowExhausted(f"no descending triple after position {start}")
    exc.split = TwoChainSplit(a1, a2, pred, None, n - 1)
    raise exc


def sweep_pair(values: Sequence[int],
               trace: Optional[List[SweepState]] = None) -> Tuple[List[int], List[int]]:
    """Run the sweep without a size check.

    Returns:
        (r1, r2) where r1 was seeded as the ascent-ended chain.
    """
    n = len(values)
    if n == 0:
        return [], []
    negated = [-v for v in values]
    r1: List[int] = [0]
    r2: List[int] = [0]
    asc, desc = r1, r2
    i = 1
    iterations = 0
    while i < n:
        if trace is not None:
            trace.append(SweepState(tuple(asc), tuple(desc), i))
        v = values[i]
        if v > values[asc[-1]]:
            asc.append(i)
            i += 1
            continue
        if v < values[desc[-1]]:
            desc.append(i)
            i += 1
            continue
        if i == n - 1:
            logger.debug("discarding last point %d", i)
            break

        if values[i + 1] > values[i]:
            oriented, top, bottom = values, asc, desc
        else:
            oriented, top, bottom = negated, desc, asc

        try:
            split = two_chain_split(oriented, i, top[-1], bottom[-1])
        except WindowExhausted as exc:
            part = exc.split
            if len(part.a2) >= 3:
                top.extend(part.a1[1:])
                bottom.extend(part.a2[1:])
            else:
                # Everything after p_i climbed above a: one long ascent from d.
                bottom.extend(range(i, n))
            break

        iterations += 1
        k2, k1, k = split.triple
        cut = split.a1.index(k2)
        top.extend(split.a1[1:cut + 1])
        top.append(k1)
        top.append(k)
        bottom.extend(split.a2[1:])
        bottom.extend(q for q in split.a1[cut + 1:] if q > k1)
        asc, desc = desc, asc
        i = k + 1

    logger.debug("sweep finished: n=%d, %d split iterations, |R1|=%d, |R2|=%d",
                 n, iterations, len(r1), len(r2))
    return r1, r2


def pseudo_pair(seq: SequenceLike,
                trace: Optional[List[SweepState]] = None
                ) -> Tuple[PseudoRollercoaster, PseudoRollercoaster]:
    """Compute two pseudo-rollercoasters covering all points but possibly the last.

    Args:
        seq: Sequence of n >= 8 distinct values.
        trace: Optional list that receives a SweepState per iteration.

    Returns:
        (R1, R2), both starting at position 0.
    """
    values = as_values(seq)
    if len(values) < MIN_PAIR_LENGTH:
        raise TooShort(f"pseudo_pair needs n >= {MIN_PAIR_LENGTH}, got {len(values)}")
    ensure_distinct(values)
    r1, r2 = sweep_pair(values, trace)
    return PseudoRollercoaster(tuple(r1)), PseudoRollercoaster(tuple(r2))


def strip_short_first_run(indices: Sequence[int], values: Sequence[int]) -> List[int]:
    """Drop the first point when the first run has only two points.

    Returns an empty list when fewer than three points remain.
    """
    out = list(indices)
    if len(out) >= 3:
        first_up = values[out[1]] > values[out[0]]
        second_up = values[out[2]] > values[out[1]]
        if first_up != second_up:
            out = out[1:]
    elif len(out) == 2:
        out = out[1:]
    if len(out) < 3:
        return []
    return out
