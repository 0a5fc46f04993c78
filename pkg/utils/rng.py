"""
RNG - Reproducible randomness from a single 64-bit seed.

Every random input flows through splitmix64 into a numpy PCG64 generator,
so a seed plus a stream number fully determines a fixture.
"""

from typing import List, Tuple

import numpy as np

GENERATOR_NAME = "splitmix64-pcg64/v1"

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> Tuple[int, int]:
    """One splitmix64 step.

    Returns:
        (next_state, output), both unsigned 64-bit integers.
    """
    state = (state + GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """PCG64 generator seeded from the splitmix64 output for (seed, stream)."""
    _, output = splitmix64((seed + stream * GAMMA) & MASK64)
    return np.random.Generator(np.random.PCG64(output))


def trial_seeds(seed: int, count: int) -> List[int]:
    """``count`` independent per-trial seeds drawn from the splitmix64 stream."""
    seeds = []
    state = seed & MASK64
    for _ in range(count):
        state, output = splitmix64(state)
        seeds.append(output)
    return seeds


def random_permutation(n: int, rng: np.random.Generator) -> List[int]:
    return [int(v) for v in rng.permutation(n) + 1]


def random_point_set(count: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    """``count`` points in general orthogonal position on the count x count grid, sorted by x."""
    ys = rng.permutation(count) + 1
    return [(x, int(y)) for x, y in zip(range(1, count + 1), ys)]
