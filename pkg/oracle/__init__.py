"""Brute-force ground truth for the search and counting modules."""
from .counting import count_bruteforce
from .search import longest_exhaustive, longest_quadratic_dp

__all__ = ["longest_exhaustive", "longest_quadratic_dp", "count_bruteforce"]
