"""Tests for path and caterpillar drawings, the validator and export."""

import json

import pytest

from core.errors import BadCaterpillar, InputParseError, NotGeneralPosition, TooFewPoints
from core.sequence import run_lengths
from drawing import (
    Drawing,
    OrthoEdge,
    TopViewCaterpillar,
    Tree,
    draw_caterpillar,
    export_json,
    export_svg,
    import_json,
    odd_run_reduce,
    path_tree,
    required_points,
    segment_intersection,
    straight_through_path,
    validate_drawing,
)
from drawing.caterpillar import CASE_LONG_RUN, CASE_SHORT_RUN
from drawing.model import OrthoPointSet


def _assert_two_spine_vertices_per_five_sets(result):
    """Every step but a final single placement puts two spine vertices on at most five sets."""
    full = result.steps
    if full and full[-1].spine_placed == 1:
        full = full[:-1]
    assert all(step.spine_placed == 2 for step in full)
    assert all(5 * step.spine_placed >= 2 * step.five_sets for step in full)
    placed = sum(step.spine_placed for step in full)
    assert 5 * placed >= 2 * sum(step.five_sets for step in full)


class TestOddRunReduce:
    def test_even_interior_run_loses_one_point(self):
        values = (9, 1, 2, 3, 4, 0, -1, -2)
        reduced = odd_run_reduce(values, list(range(8)))
        picked = [values[i] for i in reduced.indices]
        assert all(length % 2 == 1 for length in run_lengths(picked)[1:-1])
        assert len(reduced) == 7

    def test_odd_runs_untouched(self):
        values = (8, 5, 1, 3, 4, 7, 6, 2)
        assert odd_run_reduce(values, list(range(8))).indices == tuple(range(8))


class TestStraightThroughPath:
    def test_two_vertices_on_three_points(self):
        points = [(1, 2), (2, 3), (3, 1)]
        drawing = straight_through_path(points, 2)
        report = validate_drawing(drawing, path_tree(2), points)
        assert report.ok, report.to_dict()

    @pytest.mark.parametrize("n", [2, 3, 5, 8, 20, 50])
    def test_random_point_sets(self, point_sets, n):
        for points in point_sets(3 * n - 3, 30):
            drawing = straight_through_path(points, n)
            report = validate_drawing(drawing, path_tree(n), points)
            assert report.ok, report.to_dict()
            xs = [drawing.vertices[f"v{k}"][0] for k in range(1, n + 1)]
            assert xs == sorted(xs)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(2, 201))
    def test_random_point_sets_full(self, point_sets, n):
        for points in point_sets(3 * n - 3, 1000):
            drawing = straight_through_path(points, n)
            report = validate_drawing(drawing, path_tree(n), points)
            assert report.ok, report.to_dict()

    def test_too_few_points(self):
        with pytest.raises(TooFewPoints):
            straight_through_path([(1, 1), (2, 2), (3, 3)], 3)

    def test_general_position_required(self):
        with pytest.raises(NotGeneralPosition):
            straight_through_path([(1, 1), (1, 2), (3, 3)], 2)


class TestCaterpillar:
    def test_sizes(self):
        cat = TopViewCaterpillar(10)
        assert cat.n == 26
        assert required_points(cat) == 250
        assert TopViewCaterpillar.from_vertex_count(26) == cat
        tree = cat.to_tree()
        assert len(tree.vertices) == 26
        assert len(tree.edges) == 25

    def test_bad_caterpillar(self):
        with pytest.raises(BadCaterpillar):
            TopViewCaterpillar(1)
        with pytest.raises(BadCaterpillar):
            TopViewCaterpillar.from_vertex_count(7)

    def test_spine_of_two(self, point_sets):
        points = point_sets(50, 1)[0]
        result = draw_caterpillar(points, TopViewCaterpillar(2))
        report = validate_drawing(result.drawing, result.tree, points)
        assert report.ok, report.to_dict()
        assert result.steps == []

    def test_spine_of_ten(self, point_sets):
        for points in point_sets(250, 5):
            result = draw_caterpillar(points, TopViewCaterpillar(10))
            report = validate_drawing(result.drawing, result.tree, points)
            assert report.ok, report.to_dict()
            assert result.spine_vertices_placed == 10

    @pytest.mark.parametrize("spine_len", [3, 4, 5, 7, 12, 15])
    def test_random_spines(self, point_sets, spine_len):
        cat = TopViewCaterpillar(spine_len)
        for points in point_sets(required_points(cat), 10):
            result = draw_caterpillar(points, cat)
            report = validate_drawing(result.drawing, result.tree, points)
            assert report.ok, report.to_dict()
            _assert_two_spine_vertices_per_five_sets(result)

    @pytest.mark.slow
    @pytest.mark.parametrize("spine_len", range(2, 101))
    def test_random_spines_full(self, point_sets, spine_len):
        cat = TopViewCaterpillar(spine_len)
        for points in point_sets(required_points(cat), 100):
            result = draw_caterpillar(points, cat)
            report = validate_drawing(result.drawing, result.tree, points)
            assert report.ok, report.to_dict()
            assert result.spine_vertices_placed == spine_len
            _assert_two_spine_vertices_per_five_sets(result)

    def test_step_accounting(self, point_sets):
        points = point_sets(500, 1)[0]
        result = draw_caterpillar(points, TopViewCaterpillar(20))
        for step in result.steps:
            if step.case == CASE_SHORT_RUN:
                assert step.five_sets <= 5
            else:
                assert step.case == CASE_LONG_RUN
                assert step.five_sets <= 4
            assert step.spine_placed in (1, 2)
        assert result.five_sets_consumed <= result.five_set_count
        assert result.to_dict()["spine_vertices_placed"] == 20
        _assert_two_spine_vertices_per_five_sets(result)

    def test_too_few_points(self, point_sets):
        with pytest.raises(TooFewPoints):
            draw_caterpillar(point_sets(100, 1)[0], TopViewCaterpillar(5))


class TestValidator:
    def _tree(self):
        return Tree(["a", "b", "c", "d"], [("a", "b"), ("c", "d")], [])

    def test_crossing_edges(self):
        drawing = Drawing({"a": (0, 5), "b": (10, 5), "c": (5, 0), "d": (5, 10)},
                          [OrthoEdge("a", "b"), OrthoEdge("c", "d")])
        report = validate_drawing(drawing, self._tree())
        assert report.kinds() == ["planarity"]

    def test_two_bends(self):
        drawing = Drawing({"a": (0, 0), "b": (10, 10), "c": (20, 30), "d": (30, 20)},
                          [OrthoEdge("a", "b", ((0, 5), (10, 5))),
                           OrthoEdge("c", "d", ((30, 30),))])
        report = validate_drawing(drawing, self._tree())
        assert report.kinds() == ["bends"]

    def test_diagonal_and_missing_edge(self):
        drawing = Drawing({"a": (0, 0), "b": (10, 10), "c": (20, 30), "d": (30, 20)},
                          [OrthoEdge("a", "b")])
        report = validate_drawing(drawing, self._tree())
        assert report.kinds() == ["axis", "edges"]

    def test_edge_through_vertex(self):
        drawing = Drawing({"a": (0, 5), "b": (10, 5), "c": (4, 5), "d": (4, 9)},
                          [OrthoEdge("a", "b"), OrthoEdge("c", "d")])
        report = validate_drawing(drawing, self._tree())
        assert "planarity" in report.kinds()

    def test_turning_spine_vertex(self):
        tree = path_tree(3)
        drawing = Drawing({"v1": (0, 0), "v2": (10, 0), "v3": (10, 10)},
                          [OrthoEdge("v1", "v2"), OrthoEdge("v2", "v3")])
        assert validate_drawing(drawing, tree).kinds() == ["straight-through"]

    def test_vertex_off_point_set(self):
        tree = path_tree(2)
        drawing = Drawing({"v1": (0, 0), "v2": (10, 0)}, [OrthoEdge("v1", "v2")])
        assert validate_drawing(drawing, tree, [(0, 0), (9, 0)]).kinds() == ["placement"]

    def test_segment_intersection(self):
        assert segment_intersection(((0, 0), (4, 0)), ((2, -1), (2, 1)))[0] == "point"
        assert segment_intersection(((0, 0), (4, 0)), ((5, -1), (5, 1))) is None
        hit = segment_intersection(((0, 0), (4, 0)), ((2, 0), (6, 0)))
        assert hit == ("overlap", (2, 0), (4, 0))


class TestExport:
    def test_empty_drawing_svg(self):
        svg = export_svg(Drawing())
        assert svg.startswith('<?xml version="1.0"')
        assert 'version="1.1"' in svg
        assert svg.rstrip().endswith("</svg>")

    def test_svg_marks_free_points(self):
        points = [(1, 2), (2, 3), (3, 1), (4, 4)]
        drawing = straight_through_path(points[:3], 2)
        svg = export_svg(drawing, points)
        assert svg.count('class="vertex"') == 2
        assert svg.count('class="free"') == 2

    def test_json_round_trip(self, point_sets):
        points = point_sets(12, 1)[0]
        drawing = straight_through_path(points, 5)
        restored = import_json(export_json(drawing))
        assert restored.vertices == drawing.vertices
        assert restored.edges == drawing.edges

    def test_json_accepts_bend_list(self):
        text = json.dumps({"vertices": [{"id": "a", "x": 0, "y": 0}, {"id": "b", "x": 1, "y": 1}],
                           "edges": [{"from": "a", "to": "b", "bends": [[1, 0]]}]})
        assert import_json(text).edges[0].bend == (1, 0)

    @pytest.mark.parametrize("text", ["not json", "[]", '{"vertices": [{"id": "a"}]}',
                                      '{"vertices": [{"id": "a", "x": 1.5, "y": 0}]}'])
    def test_json_rejects_bad_input(self, text):
        with pytest.raises(InputParseError):
            import_json(text)

    def test_point_set_type(self):
        with pytest.raises(NotGeneralPosition):
            OrthoPointSet(((1, 1), (2, 1)))
