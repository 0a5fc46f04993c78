"""Tests for the brute-force oracles."""

import pytest

from core.errors import TooLarge, TooShort
from core.sequence import validate
from oracle import count_bruteforce, longest_exhaustive, longest_quadratic_dp

TIGHT_7 = (5, 2, 6, 3, 7, 1, 4)


class TestLongestExhaustive:
    def test_examples(self):
        assert longest_exhaustive((3, 4, 1, 2)) == 0
        assert longest_exhaustive(TIGHT_7) == 3
        assert longest_exhaustive((1, 2, 3)) == 3

    def test_limit(self, monkeypatch):
        from config.settings import reset_settings

        monkeypatch.setenv("ROLLER_EXHAUSTIVE_MAX_N", "5")
        reset_settings()
        with pytest.raises(TooLarge):
            longest_exhaustive(list(range(1, 7)))


class TestQuadraticDp:
    def test_examples(self):
        assert len(longest_quadratic_dp(list(range(1, 16)))) == 15
        assert len(longest_quadratic_dp(TIGHT_7)) == 3
        assert longest_quadratic_dp((3, 4, 1, 2)) is None

    def test_witnesses_validate(self, permutations_of):
        for perm in permutations_of(9, 100):
            rc = longest_quadratic_dp(perm)
            length = len(rc) if rc else 0
            assert length == longest_exhaustive(perm)
            if rc:
                assert validate(perm, rc.indices)


class TestCountBruteforce:
    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 0), (3, 2), (4, 2), (5, 14), (6, 42)])
    def test_small_counts(self, n, expected):
        assert count_bruteforce(n) == expected

    def test_parallel_matches_serial(self):
        assert count_bruteforce(8, threads=2) == count_bruteforce(8, threads=1) == 1208

    def test_limits(self):
        with pytest.raises(TooShort):
            count_bruteforce(0)
        with pytest.raises(TooLarge):
            count_bruteforce(11)
