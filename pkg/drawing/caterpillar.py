"""
Caterpillar - Planar L-shaped drawings of top-view caterpillars on 25s points.

The points are cut by vertical lines into groups of five.  The spine
follows a rollercoaster through the group mid-points; the other four
points of each group are reserved for leaves and for spine vertices that
cut a corner at the top of a short run.  Every step starts at a spine
vertex sitting inside a run and entered vertically from below (in the
frame where that run ascends).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from core.errors import TooFewPoints
from greedy import half_rollercoaster

from .model import (
    LEFT,
    RIGHT,
    Drawing,
    OrthoEdge,
    Point,
    TopViewCaterpillar,
    Tree,
    as_point_list,
    leaf_vertex,
    spine_vertex,
)

logger = logging.getLogger(__name__)

FIVE = 5
CASE_SHORT_RUN = 1
CASE_LONG_RUN = 2


@dataclass(frozen=True)
class FiveSet:
    """One vertical strip of five points, sorted by y from top to bottom."""
    points: Tuple[Point, ...]

    @property
    def mid(self) -> Point:
        return self.points[2]

    def reserved(self, flipped: bool) -> Tuple[Point, Point, Point, Point]:
        """(a, b, c, d): the four non-middle points from the top in the current frame."""
        a, b, _, c, d = self.points
        if flipped:
            return d, c, b, a
        return a, b, c, d


@dataclass
class CaseStep:
    """One iteration of the spine placement."""
    case: int
    start: int
    run_end: int
    five_sets: int
    spine_placed: int

    def to_dict(self):
        return {
            "case": self.case,
            "start": self.start,
            "run_end": self.run_end,
            "five_sets": self.five_sets,
            "spine_placed": self.spine_placed,
        }


@dataclass
class CaterpillarResult:
    """Drawing plus the bookkeeping of how it was built."""
    drawing: Drawing
    tree: Tree
    rollercoaster: Tuple[int, ...]
    five_set_count: int
    steps: List[CaseStep] = field(default_factory=list)

    @property
    def five_sets_consumed(self) -> int:
        return sum(s.five_sets for s in self.steps)

    @property
    def spine_vertices_placed(self) -> int:
        return 2 + sum(s.spine_placed for s in self.steps)

    def to_dict(self):
        return {
            "drawing": self.drawing.to_dict(),
            "rollercoaster": list(self.rollercoaster),
            "five_set_count": self.five_set_count,
            "five_sets_consumed": self.five_sets_consumed,
            "spine_vertices_placed": self.spine_vertices_placed,
            "steps": [s.to_dict() for s in self.steps],
        }


def required_points(caterpillar: TopViewCaterpillar) -> int:
    """ceil(25(n + 4) / 3), which is 25 per spine vertex."""
    return 25 * caterpillar.spine_len


def _direction(a: Point, b: Point) -> Tuple[int, int]:
    dx, dy = b[0] - a[0], b[1] - a[1]
    return ((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))


def _port(polyline: List[Point]) -> Tuple[int, int]:
    return _direction(polyline[0], polyline[1])


class _Builder:
    """Places spine vertices and collects leaf edges before they are named."""

    def __init__(self, spine_len: int):
        self.spine_len = spine_len
        self.drawing = Drawing()
        self.leaves: Dict[int, List[Tuple[Point, bool]]] = {}

    def spine(self, k: int, point: Point) -> None:
        self.drawing.place(spine_vertex(k), point)

    def link(self, k: int, horizontal_first: bool) -> None:
        self.drawing.connect(spine_vertex(k), spine_vertex(k + 1), horizontal_first)

    def interior(self, k: int) -> bool:
        return 1 < k < self.spine_len

    def leaf(self, k: int, point: Point, horizontal_first: bool) -> None:
        if self.interior(k):
            self.leaves.setdefault(k, []).append((point, horizontal_first))

    def finish(self) -> Drawing:
        """Name each leaf by the side of the spine direction it leaves on."""
        drawing = self.drawing
        vertices = drawing.vertices
        for k, items in sorted(self.leaves.items()):
            at = vertices[spine_vertex(k)]
            forward = next(e for e in drawing.edges
                           if e.source == spine_vertex(k) and e.target == spine_vertex(k + 1))
            out = _port(forward.polyline(vertices))
            for point, horizontal_first in items:
                bend = (point[0], at[1]) if horizontal_first else (at[0], point[1])
                port = _direction(at, bend)
                side = LEFT if out[0] * port[1] - out[1] * port[0] > 0 else RIGHT
                leaf = leaf_vertex(k, side)
                drawing.place(leaf, point)
                drawing.edges.append(OrthoEdge(spine_vertex(k), leaf, (bend,)))
        return drawing


def _run_end(ys: List[int], i: int) -> int:
    up = ys[i + 1] > ys[i]
    j = i + 1
    while j + 1 < len(ys) and (ys[j + 1] > ys[j]) == up:
        j += 1
    return j


def draw_caterpillar(points, caterpillar: TopViewCaterpillar) -> CaterpillarResult:
    """Draw a top-view caterpillar with L-shaped edges on the given points.

    Args:
        points: At least 25 * spine_len points in general orthogonal position.
        caterpillar: The caterpillar to draw.

    Returns:
        CaterpillarResult whose drawing uses vertex ids v1..vs for the spine
        and v<k>L / v<k>R for the leaves of v<k>.
    """
    pts = as_point_list(points)
    need = required_points(caterpillar)
    if len(pts) < need:
        raise TooFewPoints(f"caterpillar with n={caterpillar.n} needs {need} points, got {len(pts)}")

    groups = [FiveSet(tuple(sorted(pts[t:t + FIVE], key=lambda p: -p[1])))
              for t in range(0, len(pts) - FIVE + 1, FIVE)]
    mids = [g.mid[1] for g in groups]
    rc = half_rollercoaster(mids)
    order = list(rc.indices)
    s_pts = [groups[t].mid for t in order]
    ys = [p[1] for p in s_pts]
    logger.debug("caterpillar s=%d: %d five-sets, rollercoaster of %d mid-points",
                 caterpillar.spine_len, len(groups), len(order))

    spine_len = caterpillar.spine_len
    build = _Builder(spine_len)
    result_steps: List[CaseStep] = []

    build.spine(1, s_pts[0])
    build.spine(2, s_pts[1])
    build.link(1, horizontal_first=True)
    flipped = ys[1] < ys[0]
    build.leaf(2, groups[order[0]].reserved(flipped)[1], horizontal_first=True)

    placed, i = 2, 1
    while placed < spine_len:
        if i + 1 >= len(s_pts):
            raise TooFewPoints(f"ran out of rollercoaster points after {placed} spine vertices")
        flipped = ys[i + 1] < ys[i]
        j = _run_end(ys, i)
        k = placed
        both = placed + 2 <= spine_len

        if j <= i + 4:
            a, b, c, d = groups[order[j]].reserved(flipped)
            left, right = sorted((c, d))
            build.spine(k + 1, b)
            build.link(k, horizontal_first=False)
            build.leaf(k, left, horizontal_first=True)
            build.leaf(k + 1, a, horizontal_first=False)
            build.leaf(k + 1, s_pts[j], horizontal_first=False)
            if both:
                if j + 1 >= len(s_pts):
                    raise TooFewPoints(f"ran out of rollercoaster points after {placed + 1} spine vertices")
                build.spine(k + 2, s_pts[j + 1])
                build.link(k + 1, horizontal_first=True)
                build.leaf(k + 2, right, horizontal_first=True)
                result_steps.append(CaseStep(CASE_SHORT_RUN, i, j, j + 1 - i, 2))
                i = j + 1
            else:
                result_steps.append(CaseStep(CASE_SHORT_RUN, i, j, j - i, 1))
        else:
            _, b, c, _ = groups[order[i + 2]].reserved(flipped)
            build.spine(k + 1, s_pts[i + 2])
            build.link(k, horizontal_first=False)
            build.leaf(k, s_pts[i + 1], horizontal_first=True)
            build.leaf(k + 1, b, horizontal_first=False)
            build.leaf(k + 1, c, horizontal_first=False)
            if both:
                build.spine(k + 2, s_pts[i + 4])
                build.link(k + 1, horizontal_first=True)
                build.leaf(k + 2, s_pts[i + 3], horizontal_first=True)
                result_steps.append(CaseStep(CASE_LONG_RUN, i, j, 4, 2))
                i += 4
            else:
                result_steps.append(CaseStep(CASE_LONG_RUN, i, j, 2, 1))
        placed += 2 if both else 1

    drawing = build.finish()
    return CaterpillarResult(drawing, caterpillar.to_tree(), tuple(order), len(groups), result_steps)
