"""Exact longest-rollercoaster search."""
from .increasing import longest_increasing, longest_increasing_via_table
from .race_table import LONE, ArrayId, RaceTable, WriteRecord, process_element
from .search import (
    is_permutation,
    longest_rollercoaster,
    longest_rollercoaster_perm,
    normalize_to_permutation,
)

__all__ = [
    "ArrayId",
    "LONE",
    "RaceTable",
    "WriteRecord",
    "process_element",
    "longest_increasing",
    "longest_increasing_via_table",
    "longest_rollercoaster",
    "longest_rollercoaster_perm",
    "normalize_to_permutation",
    "is_permutation",
]
