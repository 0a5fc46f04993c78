"""
Path - x-monotone straight-through drawings of paths on 3n - 3 points.

On a subsequence whose interior runs all have odd length, L-shaped edges
that alternately leave horizontally and vertically keep every internal
vertex straight-through: turning points are always entered horizontally.
"""

import logging
from typing import Sequence

from core.errors import TooFewPoints, TooShort
from core.sequence import Rollercoaster, SequenceLike, decompose_runs, run_lengths
from greedy import sweep_pair

from .model import Drawing, as_point_list, point_sequence, spine_vertex

logger = logging.getLogger(__name__)


def odd_run_reduce(seq: SequenceLike, rc: Sequence[int]) -> Rollercoaster:
    """Make every interior run odd by dropping the second point of each even one.

    Args:
        seq: Host sequence.
        rc: Index list whose interior runs have at least three points;
            the first and last runs are left untouched.

    Returns:
        The reduced index list.
    """
    indices = list(rc.indices if isinstance(rc, Rollercoaster) else rc)
    runs = decompose_runs(seq, indices)
    drop = set()
    for run in runs[1:-1]:
        if run.length % 2 == 0:
            drop.add(run.start + 1)
    return Rollercoaster(tuple(q for t, q in enumerate(indices) if t not in drop))


def _leaves_horizontally(values: Sequence[int]) -> bool:
    """Whether the first edge must leave horizontally (first run of odd length)."""
    lengths = run_lengths(values)
    return not lengths or lengths[0] % 2 == 1


def straight_through_path(points, n: int) -> Drawing:
    """Draw the n-vertex path x-monotonically and straight-through.

    Args:
        points: At least 3n - 3 points in general orthogonal position.
        n: Number of path vertices, at least 2.

    Returns:
        Drawing with vertices v1..vn from left to right.
    """
    if n < 2:
        raise TooShort(f"a path drawing needs n >= 2, got {n}")
    pts = as_point_list(points)
    if len(pts) < 3 * n - 3:
        raise TooFewPoints(f"need at least {3 * n - 3} points for n={n}, got {len(pts)}")

    values = point_sequence(pts)
    last = len(values) - 1
    r1, r2 = sweep_pair(values)
    for chain in (r1, r2):
        if chain[-1] != last:
            chain.append(last)
    chosen = r1 if len(r1) >= len(r2) else r2
    reduced = list(odd_run_reduce(values, chosen).indices)
    logger.debug("path: %d points, chains %d/%d, reduced to %d",
                 len(pts), len(r1), len(r2), len(reduced))
    if len(reduced) < n:
        raise TooFewPoints(f"only {len(reduced)} usable points for n={n}")

    placed = reduced[:n]
    drawing = Drawing()
    for k, q in enumerate(placed, start=1):
        drawing.place(spine_vertex(k), pts[q])
    horizontal = _leaves_horizontally([values[q] for q in placed])
    for k in range(1, n):
        drawing.connect(spine_vertex(k), spine_vertex(k + 1), horizontal)
        horizontal = not horizontal
    return drawing

