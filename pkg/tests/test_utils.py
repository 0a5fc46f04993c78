"""Tests for seeded randomness."""

from drawing import check_general_position
from utils import (
    GENERATOR_NAME,
    make_rng,
    random_permutation,
    random_point_set,
    splitmix64,
    trial_seeds,
)


def test_splitmix64_reference_value():
    # First output of splitmix64 seeded with 0.
    assert splitmix64(0)[1] == 0xE220A8397B1DCDAF


def test_generator_name():
    assert GENERATOR_NAME == "splitmix64-pcg64/v1"


def test_same_seed_same_stream():
    assert random_permutation(50, make_rng(3)) == random_permutation(50, make_rng(3))
    assert random_permutation(50, make_rng(3)) != random_permutation(50, make_rng(3, stream=1))


def test_trial_seeds():
    seeds = trial_seeds(11, 5)
    assert seeds == trial_seeds(11, 5)
    assert len(set(seeds)) == 5
    assert all(0 <= s < 2 ** 64 for s in seeds)


def test_random_permutation(rng):
    perm = random_permutation(100, rng)
    assert sorted(perm) == list(range(1, 101))
    assert all(isinstance(v, int) for v in perm)


def test_random_point_set(rng):
    points = random_point_set(40, rng)
    check_general_position(points)
    assert [p[0] for p in points] == list(range(1, 41))
    assert sorted(p[1] for p in points) == list(range(1, 41))
