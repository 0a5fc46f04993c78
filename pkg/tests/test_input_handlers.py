"""Tests for sequence and point-set parsing."""

import pytest

from core.errors import DuplicateValue, InputParseError, NotGeneralPosition
from input_handlers import PointsHandler, SequenceHandler, read_text


class TestSequenceHandler:
    def test_integers_kept(self):
        result = SequenceHandler().process_text("8 5 1\n3 4 7 6 2\n")
        assert result.values == [8, 5, 1, 3, 4, 7, 6, 2]
        assert not result.was_rank_mapped

    def test_comments_and_blank_lines(self):
        result = SequenceHandler().process_text("# header\n\n3 -1  # tail\n10\n")
        assert result.values == [3, -1, 10]
        assert result.original_tokens == ["3", "-1", "10"]

    def test_decimals_rank_mapped(self):
        result = SequenceHandler().process_text("0.5 -2 1e1 0.25")
        assert result.values == [3, 1, 4, 2]
        assert result.was_rank_mapped
        assert result.to_dict()["original_tokens"][2] == "1e1"

    def test_exact_decimal_comparison(self):
        result = SequenceHandler().process_text("0.30000000000000001 0.3")
        assert result.values == [2, 1]

    def test_duplicates(self):
        with pytest.raises(DuplicateValue):
            SequenceHandler().process_text("1 2 1")
        with pytest.raises(DuplicateValue):
            SequenceHandler().process_text("0.5 .5")

    def test_bad_token(self):
        with pytest.raises(InputParseError) as info:
            SequenceHandler().process_text("1 2\n3 x")
        assert "line 2" in str(info.value)

    def test_empty(self):
        assert SequenceHandler().process_text("").values == []

    def test_load(self, tmp_path):
        path = tmp_path / "seq.txt"
        path.write_text("5 2 6 3 7 1 4\n", encoding="utf-8")
        assert SequenceHandler().load(str(path)).values == [5, 2, 6, 3, 7, 1, 4]

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputParseError):
            read_text(str(tmp_path / "missing.txt"))

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "seq.txt"
        path.write_bytes(b"3\n4\n\xff\xfe\n1\n2\n")
        with pytest.raises(InputParseError):
            read_text(str(path))


class TestPointsHandler:
    def test_parse_and_sort(self):
        result = PointsHandler().process_text("3 1\n1 2\n# note\n2 3\n")
        assert result.points == [(1, 2), (2, 3), (3, 1)]
        assert result.to_dict()["points"][0] == [1, 2]

    def test_shared_coordinate(self):
        with pytest.raises(NotGeneralPosition) as info:
            PointsHandler().process_text("1 2\n1 3\n", source="pts.txt")
        assert "pts.txt" in str(info.value)

    @pytest.mark.parametrize("text", ["1 2 3\n", "1.5 2\n", "a b\n"])
    def test_bad_lines(self, text):
        with pytest.raises(InputParseError):
            PointsHandler().process_text(text)

    def test_load(self, tmp_path):
        path = tmp_path / "points.txt"
        path.write_text("2 2\n1 1\n", encoding="utf-8")
        result = PointsHandler().load(str(path))
        assert result.points == [(1, 1), (2, 2)]
        assert result.source == str(path)
