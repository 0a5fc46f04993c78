"""Utility functions for the rollercoaster toolkit."""
from .rng import (
    GENERATOR_NAME,
    make_rng,
    random_permutation,
    random_point_set,
    splitmix64,
    trial_seeds,
)

__all__ = [
    "GENERATOR_NAME",
    "splitmix64",
    "make_rng",
    "trial_seeds",
    "random_permutation",
    "random_point_set",
]
