"""Tests for exact counting of rollercoaster permutations."""

import logging
from itertools import permutations, product

import pytest

from core.errors import InputParseError, NotAPermutation, TooShort
from core.sequence import is_rollercoaster_values
from counting import (
    LAMBDA,
    LIMIT_CONSTANT,
    PUBLISHED_COUNTS,
    asymptotic_ratio,
    blocks_long_enough,
    compare_with_published,
    count_pattern_avoiders,
    count_rollercoasters,
    count_table,
    descent_word,
    descent_word_accepted,
    pattern_avoiding_automaton,
    rollercoaster_automaton,
)
from oracle import count_bruteforce


class TestDescentWords:
    def test_examples(self):
        assert descent_word((1, 2, 3)) == "aa"
        assert descent_word((3, 2, 1)) == "bb"
        assert descent_word((8, 5, 1, 3, 4, 7, 6, 2)) == "bbaaabb"

    def test_not_a_permutation(self):
        with pytest.raises(NotAPermutation):
            descent_word((1, 3))

    def test_automaton_matches_block_check(self):
        for size in range(10):
            for letters in product("ab", repeat=size):
                word = "".join(letters)
                assert descent_word_accepted(word) == blocks_long_enough(word)

    def test_accepted_words_are_rollercoasters(self):
        for perm in permutations(range(1, 7)):
            assert descent_word_accepted(descent_word(perm)) == is_rollercoaster_values(perm)

    def test_bad_letter(self):
        with pytest.raises(InputParseError):
            rollercoaster_automaton().accepts("abc")
        with pytest.raises(InputParseError):
            blocks_long_enough("aacc")

    def test_minimized_sizes(self):
        assert len(rollercoaster_automaton().states) <= 5
        assert len(pattern_avoiding_automaton().states) <= 7


class TestCounts:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14])
    def test_published_values(self, n):
        assert count_rollercoasters(n) == PUBLISHED_COUNTS[n]

    def test_eleven_differs_from_table(self, caplog):
        with caplog.at_level(logging.WARNING):
            computed, published, matches = compare_with_published(11)
        assert published == 40580
        assert not matches
        assert "r(11)" in caplog.text
        ratio = computed / count_rollercoasters(10)
        assert 10 * 0.687 * 0.8 <= ratio <= 11 * 0.687 * 1.2

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_bruteforce(self, n):
        assert count_rollercoasters(n) == count_bruteforce(n)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [9, 10])
    def test_matches_bruteforce_full(self, n):
        assert count_rollercoasters(n) == count_bruteforce(n)

    def test_too_short(self):
        with pytest.raises(TooShort):
            count_rollercoasters(0)

    def test_pattern_avoiders_bound_counts(self):
        for n in range(1, 15):
            assert count_rollercoasters(n) <= count_pattern_avoiders(n)

    def test_pattern_avoiders_by_enumeration(self):
        for n in range(1, 8):
            expected = sum(
                1 for perm in permutations(range(1, n + 1))
                if "aba" not in descent_word(perm) and "bab" not in descent_word(perm)
            )
            assert count_pattern_avoiders(n) == expected


class TestAsymptotics:
    def test_ratio_at_fourteen(self):
        assert abs(asymptotic_ratio(14) - 0.20) <= 0.02

    def test_ratio_at_twenty(self):
        assert 0.19 <= asymptotic_ratio(20) <= 0.22

    def test_ratio_near_limit(self):
        for n in range(14, 21):
            assert abs(asymptotic_ratio(n) - LIMIT_CONSTANT) <= 0.02

    def test_successive_differences_shrink(self):
        ratios = [asymptotic_ratio(n) for n in range(12, 21)]
        diffs = [abs(b - a) for a, b in zip(ratios, ratios[1:])]
        assert all(later < earlier for earlier, later in zip(diffs, diffs[1:]))

    def test_growth_factor(self):
        lam = float(LAMBDA)
        counts = {n: count_rollercoasters(n) for n in range(15, 32)}
        for n in range(15, 31):
            growth = counts[n + 1] / counts[n]
            assert abs(growth / ((n + 1) * lam) - 1) <= 0.10

    def test_too_short(self):
        with pytest.raises(TooShort):
            asymptotic_ratio(2)

    def test_table(self):
        rows = count_table(6)
        assert [r.n for r in rows] == list(range(1, 7))
        assert [r.count for r in rows] == [1, 0, 2, 2, 14, 42]
        assert rows[0].ratio is None and rows[2].ratio is not None
        assert rows[5].to_dict()["r"] == 42
