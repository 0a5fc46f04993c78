"""Index structures used by the longest-rollercoaster search."""
from .aggregate_tree import ABOVE, BELOW, EMPTY, RELATIONS, AggregateSearchTree
from .perm_findmax import PermFindMax
from .successor import SuccessorDict
from .suffix_max import ReversedSuffixMax, SuffixMaxStructure

__all__ = [
    "ABOVE",
    "BELOW",
    "EMPTY",
    "RELATIONS",
    "AggregateSearchTree",
    "SuccessorDict",
    "SuffixMaxStructure",
    "ReversedSuffixMax",
    "PermFindMax",
]
