"""Input handlers for sequence and point-set files."""
from .sequence_handler import PointsHandler, PointsResult, SequenceHandler, SequenceResult, read_text

__all__ = [
    "SequenceHandler",
    "SequenceResult",
    "PointsHandler",
    "PointsResult",
    "read_text",
]
