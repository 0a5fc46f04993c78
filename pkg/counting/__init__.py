"""Exact counting of rollercoaster permutations."""
from .automaton import (
    DescentAutomaton,
    blocks_long_enough,
    descent_word,
    descent_word_accepted,
    pattern_avoiding_automaton,
    rollercoaster_automaton,
)
from .counts import (
    LAMBDA,
    LIMIT_CONSTANT,
    PUBLISHED_COUNTS,
    CountRow,
    asymptotic_ratio,
    compare_with_published,
    count_accepted,
    count_pattern_avoiders,
    count_rollercoasters,
    count_table,
)

__all__ = [
    "DescentAutomaton",
    "rollercoaster_automaton",
    "pattern_avoiding_automaton",
    "descent_word",
    "descent_word_accepted",
    "blocks_long_enough",
    "LAMBDA",
    "LIMIT_CONSTANT",
    "PUBLISHED_COUNTS",
    "CountRow",
    "count_accepted",
    "count_rollercoasters",
    "count_pattern_avoiders",
    "asymptotic_ratio",
    "compare_with_published",
    "count_table",
]
