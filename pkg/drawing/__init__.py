"""Point-set embeddings of paths and top-view caterpillars."""
from .caterpillar import CaseStep, CaterpillarResult, FiveSet, draw_caterpillar, required_points
from .export import export_json, export_svg, import_json
from .model import (
    LEFT,
    RIGHT,
    Drawing,
    OrthoEdge,
    OrthoPointSet,
    TopViewCaterpillar,
    Tree,
    as_point_list,
    check_general_position,
    leaf_vertex,
    path_tree,
    spine_vertex,
)
from .path import odd_run_reduce, straight_through_path
from .validate import ValidationReport, Violation, segment_intersection, validate_drawing

__all__ = [
    "LEFT",
    "RIGHT",
    "Drawing",
    "OrthoEdge",
    "OrthoPointSet",
    "TopViewCaterpillar",
    "Tree",
    "as_point_list",
    "check_general_position",
    "leaf_vertex",
    "path_tree",
    "spine_vertex",
    "odd_run_reduce",
    "straight_through_path",
    "FiveSet",
    "CaseStep",
    "CaterpillarResult",
    "draw_caterpillar",
    "required_points",
    "ValidationReport",
    "Violation",
    "segment_intersection",
    "validate_drawing",
    "export_svg",
    "export_json",
    "import_json",
]
