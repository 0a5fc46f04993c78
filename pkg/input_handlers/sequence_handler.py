"""
Sequence Handler - Parses number sequences and point sets from text and files.
"""

import logging
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from sympy import Rational

from core.errors import DuplicateValue, InputParseError, NotGeneralPosition
from drawing.model import check_general_position

logger = logging.getLogger(__name__)

INTEGER = re.compile(r"[+-]?\d+")
DECIMAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


def _content_lines(text: str):
    """Yield (line number, content) with comments and blank lines removed."""
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if content:
            yield number, content


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputParseError(f"cannot read {path}: {e}") from e


@dataclass
class SequenceResult:
    """Result from sequence parsing."""
    values: List[int]
    original_tokens: List[str]
    was_rank_mapped: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "values": self.values,
            "original_tokens": self.original_tokens,
            "was_rank_mapped": self.was_rank_mapped,
        }


@dataclass
class PointsResult:
    """Result from point-set parsing."""
    points: List[Tuple[int, int]]
    source: str

    def to_dict(self) -> Dict[str, Any]:
        return {"points": [list(p) for p in self.points], "source": self.source}


class SequenceHandler:
    """Handles whitespace-separated number sequences."""

    def process_text(self, text: str) -> SequenceResult:
        """Parse a sequence of distinct numbers.

        Integers are kept as they are. If any token is a decimal, every
        token is read exactly and replaced by its rank 1..n.

        Args:
            text: Raw text input.

        Returns:
            SequenceResult with the parsed values.
        """
        tokens = []
        for number, content in _content_lines(text):
            for token in content.split():
                if not DECIMAL.fullmatch(token):
                    raise InputParseError(f"line {number}: not a number: {token!r}")
                tokens.append(token)

        if all(INTEGER.fullmatch(t) for t in tokens):
            values = [int(t) for t in tokens]
            self._check_distinct(tokens, values)
            return SequenceResult(values, tokens, False)

        exact = [Rational(t) for t in tokens]
        self._check_distinct(tokens, exact)
        rank = {v: r for r, v in enumerate(sorted(exact), start=1)}
        logger.debug("rank-mapped %d non-integer values", len(tokens))
        return SequenceResult([rank[v] for v in exact], tokens, True)

    def load(self, path: str) -> SequenceResult:
        return self.process_text(read_text(path))

    @staticmethod
    def _check_distinct(tokens: List[str], values: List[Any]) -> None:
        seen = {}
        for token, value in zip(tokens, values):
            if value in seen:
                raise DuplicateValue(f"value {token} repeats {seen[value]}")
            seen[value] = token


class PointsHandler:
    """Handles point files with one "x y" integer pair per line."""

    def process_text(self, text: str, source: str = "<text>") -> PointsResult:
        points = []
        for number, content in _content_lines(text):
            parts = content.split()
            if len(parts) != 2 or not all(INTEGER.fullmatch(p) for p in parts):
                raise InputParseError(f"line {number}: expected 'x y' integers, got {content!r}")
            points.append((int(parts[0]), int(parts[1])))
        try:
            check_general_position(points)
        except NotGeneralPosition as e:
            raise NotGeneralPosition(f"{source}: {e}") from e
        return PointsResult(sorted(points), source)

    def load(self, path: str) -> PointsResult:
        return self.process_text(read_text(path), source=path)
