"""
Model - Point sets, trees and orthogonal drawings.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.errors import BadCaterpillar, NotGeneralPosition, TooShort

Point = Tuple[int, int]

LEFT = "L"
RIGHT = "R"


def check_general_position(points: Iterable[Point]) -> None:
    """Raise NotGeneralPosition if two points share an x or a y coordinate."""
    xs, ys = set(), set()
    for x, y in points:
        if x in xs:
            raise NotGeneralPosition(f"two points share x = {x}")
        if y in ys:
            raise NotGeneralPosition(f"two points share y = {y}")
        xs.add(x)
        ys.add(y)


@dataclass(frozen=True)
class OrthoPointSet:
    """Points with pairwise distinct x and pairwise distinct y coordinates."""
    points: Tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((p[0], p[1]) for p in self.points)
        check_general_position(pts)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def sorted_by_x(self) -> List[Point]:
        return sorted(self.points)


def as_point_list(points) -> List[Point]:
    """Points sorted by x, checked for general orthogonal position."""
    if isinstance(points, OrthoPointSet):
        return points.sorted_by_x()
    pts = [(p[0], p[1]) for p in points]
    check_general_position(pts)
    return sorted(pts)


@dataclass
class Tree:
    """Labelled tree with a distinguished spine path.

    ``sides`` maps each leaf hanging off an interior spine vertex to the
    side (L or R) of the spine traversal it must leave on.
    """
    vertices: List[str]
    edges: List[Tuple[str, str]]
    spine: List[str]
    sides: Dict[str, str] = field(default_factory=dict)

    def leaves_of(self, vertex: str) -> List[str]:
        spine = set(self.spine)
        out = []
        for u, v in self.edges:
            if u == vertex and v not in spine:
                out.append(v)
            elif v == vertex and u not in spine:
                out.append(u)
        return out


def path_tree(n: int) -> Tree:
    """The n-vertex path v1 - v2 - ... - vn."""
    if n < 2:
        raise TooShort(f"a path drawing needs n >= 2, got {n}")
    vertices = [f"v{k}" for k in range(1, n + 1)]
    edges = list(zip(vertices, vertices[1:]))
    return Tree(vertices, edges, list(vertices))


def spine_vertex(k: int) -> str:
    return f"v{k}"


def leaf_vertex(k: int, side: str) -> str:
    return f"v{k}{side}"


@dataclass(frozen=True)
class TopViewCaterpillar:
    """Caterpillar whose interior spine vertices each carry one leaf per side."""
    spine_len: int

    def __post_init__(self):
        if self.spine_len < 2:
            raise BadCaterpillar(f"spine length must be >= 2, got {self.spine_len}")

    @classmethod
    def from_vertex_count(cls, n: int) -> "TopViewCaterpillar":
        if n < 2 or n % 3 != 2:
            raise BadCaterpillar(f"top-view caterpillars have n = 3s - 4 vertices, got {n}")
        return cls((n + 4) // 3)

    @property
    def n(self) -> int:
        return 3 * self.spine_len - 4

    def to_tree(self) -> Tree:
        spine = [spine_vertex(k) for k in range(1, self.spine_len + 1)]
        vertices = list(spine)
        edges = list(zip(spine, spine[1:]))
        sides = {}
        for k in range(2, self.spine_len):
            for side in (LEFT, RIGHT):
                leaf = leaf_vertex(k, side)
                vertices.append(leaf)
                edges.append((spine_vertex(k), leaf))
                sides[leaf] = side
        return Tree(vertices, edges, spine, sides)


@dataclass(frozen=True)
class OrthoEdge:
    """Polyline source -> bends -> target."""
    source: str
    target: str
    bends: Tuple[Point, ...] = ()

    @property
    def bend(self) -> Optional[Point]:
        return self.bends[0] if self.bends else None

    def polyline(self, vertices: Dict[str, Point]) -> List[Point]:
        return [vertices[self.source], *self.bends, vertices[self.target]]

    def to_dict(self):
        out = {"from": self.source, "to": self.target}
        if len(self.bends) == 1:
            out["bend"] = list(self.bends[0])
        elif self.bends:
            out["bends"] = [list(b) for b in self.bends]
        return out


@dataclass
class Drawing:
    """Vertex placement plus one orthogonal polyline per edge."""
    vertices: Dict[str, Point] = field(default_factory=dict)
    edges: List[OrthoEdge] = field(default_factory=list)

    def place(self, vertex: str, point: Point) -> None:
        self.vertices[vertex] = (point[0], point[1])

    def connect(self, source: str, target: str, horizontal_first: bool) -> OrthoEdge:
        """Add an L-shaped edge leaving ``source`` horizontally or vertically."""
        (ux, uy), (vx, vy) = self.vertices[source], self.vertices[target]
        bend = (vx, uy) if horizontal_first else (ux, vy)
        edge = OrthoEdge(source, target, (bend,))
        self.edges.append(edge)
        return edge

    def edge_set(self):
        return {frozenset((e.source, e.target)) for e in self.edges}

    def to_dict(self):
        return {
            "vertices": [{"id": v, "x": p[0], "y": p[1]} for v, p in self.vertices.items()],
            "edges": [e.to_dict() for e in self.edges],
        }


def point_sequence(points: Sequence[Point]) -> List[int]:
    """y-values of points already sorted by x."""
    return [p[1] for p in points]
