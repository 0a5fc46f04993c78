"""
Validate - Independent checks of orthogonal drawings against their trees.

Geometry is exact: coordinates are integers and every intersection
parameter is a sympy Rational.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import Rational

from .model import LEFT, RIGHT, Drawing, OrthoEdge, Point, Tree

logger = logging.getLogger(__name__)

Segment = Tuple[Point, Point]


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def to_dict(self):
        return {"kind": self.kind, "detail": self.detail}


@dataclass
class ValidationReport:
    """Violations found in one drawing; empty means valid."""
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, detail: str) -> None:
        self.violations.append(Violation(kind, detail))

    def kinds(self) -> List[str]:
        return sorted({v.kind for v in self.violations})

    def to_dict(self):
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


def _cross(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def _at(p, r, t):
    return (p[0] + t * r[0], p[1] + t * r[1])


def segment_intersection(s: Segment, t: Segment):
    """Exact intersection of two nondegenerate segments.

    Returns:
        None, ("point", P) or ("overlap", P, Q).
    """
    p, p2 = s
    q, q2 = t
    r = _sub(p2, p)
    d = _sub(q2, q)
    denom = _cross(r, d)
    qp = _sub(q, p)
    if denom == 0:
        if _cross(qp, r) != 0:
            return None
        rr = _dot(r, r)
        t0 = Rational(_dot(qp, r), rr)
        t1 = t0 + Rational(_dot(d, r), rr)
        lo, hi = max(Rational(0), min(t0, t1)), min(Rational(1), max(t0, t1))
        if lo > hi:
            return None
        if lo == hi:
            return ("point", _at(p, r, lo))
        return ("overlap", _at(p, r, lo), _at(p, r, hi))
    u = Rational(_cross(qp, d), denom)
    v = Rational(_cross(qp, r), denom)
    if 0 <= u <= 1 and 0 <= v <= 1:
        return ("point", _at(p, r, u))
    return None


def _on_segment(point: Point, seg: Segment) -> bool:
    a, b = seg
    if _cross(_sub(b, a), _sub(point, a)) != 0:
        return False
    return (min(a[0], b[0]) <= point[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= point[1] <= max(a[1], b[1]))


def direction(a: Point, b: Point) -> Tuple[int, int]:
    dx, dy = b[0] - a[0], b[1] - a[1]
    return ((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))


def port(edge: OrthoEdge, vertex: str, vertices: Dict[str, Point]) -> Tuple[int, int]:
    """Direction in which ``edge`` leaves ``vertex``."""
    line = edge.polyline(vertices)
    if edge.target == vertex:
        line = line[::-1]
    return direction(line[0], line[1])


def leaf_side(out: Tuple[int, int], leaf_port: Tuple[int, int]) -> str:
    """Side of the spine traversal direction ``out`` that ``leaf_port`` points to."""
    return LEFT if _cross(out, leaf_port) > 0 else RIGHT


def _check_placement(drawing: Drawing, tree: Tree, points: Optional[Iterable[Point]],
                     report: ValidationReport) -> None:
    expected = set(tree.vertices)
    drawn = set(drawing.vertices)
    for v in sorted(expected - drawn):
        report.add("placement", f"vertex {v} is not drawn")
    for v in sorted(drawn - expected):
        report.add("placement", f"vertex {v} is not in the tree")
    seen: Dict[Point, str] = {}
    for v, p in drawing.vertices.items():
        if p in seen:
            report.add("placement", f"vertices {seen[p]} and {v} share point {p}")
        seen[p] = v
    if points is not None:
        allowed = {(p[0], p[1]) for p in points}
        for v, p in drawing.vertices.items():
            if p not in allowed:
                report.add("placement", f"vertex {v} at {p} is not an input point")


def _check_shapes(drawing: Drawing, report: ValidationReport) -> List[bool]:
    usable = []
    for e in drawing.edges:
        name = f"{e.source}-{e.target}"
        if e.source not in drawing.vertices or e.target not in drawing.vertices:
            usable.append(False)
            continue
        if len(e.bends) > 1:
            report.add("bends", f"edge {name} has {len(e.bends)} bends")
        line = e.polyline(drawing.vertices)
        ok = True
        orientations = []
        for a, b in zip(line, line[1:]):
            if a == b:
                report.add("axis", f"edge {name} has a zero-length segment at {a}")
                ok = False
            elif a[0] != b[0] and a[1] != b[1]:
                report.add("axis", f"edge {name} has a non axis-parallel segment {a}-{b}")
                ok = False
            else:
                orientations.append(a[1] == b[1])
        for h1, h2 in zip(orientations, orientations[1:]):
            if h1 == h2:
                report.add("bends", f"edge {name} bends without turning")
        usable.append(ok)
    return usable


def _check_planarity(drawing: Drawing, usable: List[bool], report: ValidationReport) -> None:
    vertices = drawing.vertices
    segments = []
    for idx, e in enumerate(drawing.edges):
        if not usable[idx]:
            continue
        line = e.polyline(vertices)
        for a, b in zip(line, line[1:]):
            segments.append((min(a[0], b[0]), max(a[0], b[0]), idx, (a, b)))
    segments.sort(key=lambda item: item[0])

    active: List[tuple] = []
    for xmin, xmax, idx, seg in segments:
        active = [item for item in active if item[1] >= xmin]
        for _, _, other, oseg in active:
            if other == idx:
                continue
            hit = segment_intersection(seg, oseg)
            if hit is None:
                continue
            e, f = drawing.edges[idx], drawing.edges[other]
            shared = {e.source, e.target} & {f.source, f.target}
            if hit[0] == "point" and any(hit[1] == vertices[w] for w in shared):
                continue
            report.add("planarity",
                       f"edges {e.source}-{e.target} and {f.source}-{f.target} meet at {hit[1:]}")
        active.append((xmin, xmax, idx, seg))

    # No edge may pass through a vertex it is not incident to.
    by_x = sorted((p[0], v) for v, p in vertices.items())
    xs = [x for x, _ in by_x]
    for xmin, xmax, idx, seg in segments:
        e = drawing.edges[idx]
        for _, v in by_x[bisect_left(xs, xmin):bisect_right(xs, xmax)]:
            if v in (e.source, e.target):
                continue
            if _on_segment(vertices[v], seg):
                report.add("planarity", f"edge {e.source}-{e.target} passes through vertex {v}")


def _edge_lookup(drawing: Drawing) -> Dict[frozenset, OrthoEdge]:
    return {frozenset((e.source, e.target)): e for e in drawing.edges}


def _check_spine(drawing: Drawing, tree: Tree, report: ValidationReport) -> None:
    vertices = drawing.vertices
    lookup = _edge_lookup(drawing)
    spine = tree.spine
    for k in range(1, len(spine) - 1):
        prev_v, v, next_v = spine[k - 1], spine[k], spine[k + 1]
        back = lookup.get(frozenset((prev_v, v)))
        ahead = lookup.get(frozenset((v, next_v)))
        if back is None or ahead is None or v not in vertices:
            continue
        p_back = port(back, v, vertices)
        p_ahead = port(ahead, v, vertices)
        if p_back != (-p_ahead[0], -p_ahead[1]):
            report.add("straight-through", f"spine vertex {v} turns ({p_back} / {p_ahead})")

        leaves = tree.leaves_of(v)
        if not leaves:
            continue
        ports = {p_back: prev_v, p_ahead: next_v}
        for leaf in leaves:
            edge = lookup.get(frozenset((v, leaf)))
            if edge is None or leaf not in vertices:
                continue
            leaf_port = port(edge, v, vertices)
            if leaf_port in ports:
                report.add("top-view",
                           f"leaf {leaf} uses the same port of {v} as {ports[leaf_port]}")
            ports[leaf_port] = leaf
            if _cross(p_ahead, leaf_port) == 0:
                report.add("top-view", f"leaf {leaf} of {v} is collinear with the spine")
                continue
            expected = tree.sides.get(leaf)
            if expected is not None and leaf_side(p_ahead, leaf_port) != expected:
                report.add("top-view", f"leaf {leaf} of {v} leaves on the wrong side")


def validate_drawing(drawing: Drawing, tree: Tree,
                     points: Optional[Iterable[Point]] = None) -> ValidationReport:
    """Check a drawing against the tree it claims to draw.

    Args:
        drawing: The drawing.
        tree: The tree, with its spine and leaf side labels.
        points: When given, every vertex must sit on one of these points.

    Returns:
        ValidationReport listing every violation found.
    """
    report = ValidationReport()
    _check_placement(drawing, tree, points, report)

    tree_edges = {frozenset(e) for e in tree.edges}
    drawn_edges = drawing.edge_set()
    if len(drawn_edges) != len(drawing.edges):
        report.add("edges", "the drawing repeats an edge")
    for e in sorted(tuple(sorted(x)) for x in tree_edges - drawn_edges):
        report.add("edges", f"tree edge {e[0]}-{e[1]} is not drawn")
    for e in sorted(tuple(sorted(x)) for x in drawn_edges - tree_edges):
        report.add("edges", f"drawn edge {e[0]}-{e[1]} is not in the tree")

    usable = _check_shapes(drawing, report)
    _check_planarity(drawing, usable, report)
    _check_spine(drawing, tree, report)
    if not report.ok:
        logger.debug("drawing has %d violations: %s", len(report.violations), report.kinds())
    return report
