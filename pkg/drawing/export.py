"""
Export - SVG rendering and lossless JSON for drawings.
"""

import html
import json
from typing import List, Optional, Sequence

from core.errors import InputParseError

from .model import Drawing, OrthoEdge, Point

MARGIN = 20
SCALE = 10
POINT_RADIUS = 3


class SvgCanvas:
    """Minimal SVG 1.1 writer. y grows upwards in drawing coordinates."""

    def __init__(self, min_x: int, max_y: int, width: int, height: int):
        self.min_x = min_x
        self.max_y = max_y
        self.width = width
        self.height = height
        self.parts: List[str] = []

    def map(self, p: Point):
        return (MARGIN + (p[0] - self.min_x) * SCALE, MARGIN + (self.max_y - p[1]) * SCALE)

    def group_start(self, group_id: str, **attrs) -> None:
        extra = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())
        self.parts.append(f'<g id="{html.escape(group_id)}"{extra}>\n')

    def group_end(self) -> None:
        self.parts.append("</g>\n")

    def polyline(self, points: Sequence[Point], title: str) -> None:
        coords = " ".join("%d,%d" % self.map(p) for p in points)
        self.parts.append(f'<polyline points="{coords}"><title>{html.escape(title)}</title></polyline>\n')

    def circle(self, p: Point, title: str, css_class: str = "point") -> None:
        cx, cy = self.map(p)
        self.parts.append(f'<circle class="{css_class}" cx="{cx}" cy="{cy}" r="{POINT_RADIUS}">'
                          f'<title>{html.escape(title)}</title></circle>\n')

    def get_svg(self) -> str:
        head = (
            '<?xml version="1.0" standalone="no"?>\n'
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
            '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
            f'<svg version="1.1" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}" xmlns="http://www.w3.org/2000/svg">\n'
        )
        return head + "".join(self.parts) + "</svg>\n"


def export_svg(drawing: Drawing, points: Optional[Sequence[Point]] = None) -> str:
    """Render a drawing as an SVG 1.1 document.

    Args:
        drawing: The drawing.
        points: Optional full point set; unused points are drawn hollow.

    Returns:
        The SVG text.
    """
    coords = list(drawing.vertices.values()) + list(points or [])
    for e in drawing.edges:
        coords.extend(e.bends)
    if coords:
        min_x = min(p[0] for p in coords)
        max_x = max(p[0] for p in coords)
        min_y = min(p[1] for p in coords)
        max_y = max(p[1] for p in coords)
    else:
        min_x = max_x = min_y = max_y = 0
    width = 2 * MARGIN + (max_x - min_x) * SCALE
    height = 2 * MARGIN + (max_y - min_y) * SCALE
    canvas = SvgCanvas(min_x, max_y, width, height)

    if points:
        used = set(drawing.vertices.values())
        canvas.group_start("points", fill="none", stroke="#999999")
        for p in points:
            if (p[0], p[1]) not in used:
                canvas.circle(p, f"({p[0]}, {p[1]})", css_class="free")
        canvas.group_end()

    canvas.group_start("edges", fill="none", stroke="#1f4e79", stroke_width=2)
    for e in drawing.edges:
        canvas.polyline(e.polyline(drawing.vertices), f"{e.source}-{e.target}")
    canvas.group_end()

    canvas.group_start("vertices", fill="#c0392b")
    for v, p in drawing.vertices.items():
        canvas.circle(p, v, css_class="vertex")
    canvas.group_end()
    return canvas.get_svg()


def export_json(drawing: Drawing) -> str:
    return json.dumps(drawing.to_dict(), indent=2)


def _point(value, what: str) -> Point:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in value)):
        raise InputParseError(f"{what} must be an [x, y] integer pair, got {value!r}")
    return (value[0], value[1])


def import_json(text: str) -> Drawing:
    """Inverse of export_json."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(f"drawing is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise InputParseError("drawing JSON must be an object")

    drawing = Drawing()
    try:
        for item in data.get("vertices", []):
            drawing.place(str(item["id"]), _point([item["x"], item["y"]], f"vertex {item['id']}"))
        for item in data.get("edges", []):
            if "bends" in item:
                bends = tuple(_point(b, "bend") for b in item["bends"])
            elif "bend" in item:
                bends = (_point(item["bend"], "bend"),)
            else:
                bends = ()
            drawing.edges.append(OrthoEdge(str(item["from"]), str(item["to"]), bends))
    except (KeyError, TypeError) as e:
        raise InputParseError(f"malformed drawing JSON: {e}") from e
    return drawing
