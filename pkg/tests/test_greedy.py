"""Tests for the linear-time sweeps: half rollercoaster and k-rollercoaster."""

import pytest

from core.errors import BadK, EmptyWindow, InvalidIndices, TooShort, WindowExhausted
from core.sequence import run_lengths, validate
from greedy import (
    half_rollercoaster,
    k_rollercoaster,
    k_sweep,
    longest_monotone,
    pseudo_pair,
    refine_pair,
    strip_short_first_run,
    sweep_pair,
    two_chain_split,
)
from greedy.sweep import SweepState

SEQ_8 = (8, 5, 1, 3, 4, 7, 6, 2)
TIGHT_7 = (5, 2, 6, 3, 7, 1, 4)


def _pseudo_ok(values, chain):
    """All runs but the first have at least three points."""
    picked = [values[i] for i in chain]
    return all(length >= 3 for length in run_lengths(picked)[1:])


class TestTwoChainSplit:
    def test_descending_triple_closes_window(self):
        values = [10, 0, 5, 7, 9, 4]
        split = two_chain_split(values, start=2, a=0, d=1)
        assert split.triple == (0, 4, 5)
        assert split.a1 == [0]
        assert split.a2 == [1, 2, 3, 4]
        assert split.end == 5

    def test_points_above_a_join_first_chain(self):
        values = [10, 0, 5, 12, 7, 6]
        split = two_chain_split(values, start=2, a=0, d=1)
        assert split.a1 == [0, 3]
        assert split.a2 == [1, 2, 4]
        # 6 is below both chain ends; 7 was attached while 12 ended the first chain.
        assert split.triple == (3, 4, 5)

    def test_ascending_window_is_exhausted(self):
        with pytest.raises(WindowExhausted) as info:
            two_chain_split([10, 0, 5, 6, 7, 8], start=2, a=0, d=1)
        assert info.value.split.triple is None
        assert info.value.split.a2 == [1, 2, 3, 4, 5]

    def test_start_must_lie_between_ends(self):
        with pytest.raises(InvalidIndices):
            two_chain_split([10, 0, 11, 12], start=2, a=0, d=1)

    def test_random_windows_against_brute_force(self, rng):
        def has_descending_triple(values, positions):
            picked = [values[q] for q in sorted(positions)]
            return any(picked[x] > picked[y] > picked[z]
                       for x in range(len(picked))
                       for y in range(x + 1, len(picked))
                       for z in range(y + 1, len(picked)))

        checked = 0
        for _ in range(3000):
            n = int(rng.integers(4, 21))
            values = [int(v) for v in rng.permutation(n)]
            start = int(rng.integers(2, n - 1))
            above = [q for q in range(start) if values[q] > values[start]]
            below = [q for q in range(start) if values[q] < values[start]]
            if not above or not below or values[start + 1] < values[start]:
                continue
            a = above[int(rng.integers(0, len(above)))]
            d = below[int(rng.integers(0, len(below)))]
            try:
                split = two_chain_split(values, start, a, d)
            except WindowExhausted as exc:
                split = exc.split
                window = {a, d} | set(range(start, n))
                assert not has_descending_triple(values, window)
                assert set(split.a1) | set(split.a2) == window
                continue

            checked += 1
            k2, k1, k = split.triple
            assert k2 < k1 < k == split.end
            assert values[k2] > values[k1] > values[k]
            prefix = {a, d} | set(range(start, split.end))
            assert set(split.a1) | set(split.a2) == prefix
            assert not has_descending_triple(values, prefix)
            for chain in (split.a1, split.a2):
                assert chain == sorted(chain)
                assert [values[q] for q in chain] == sorted(values[q] for q in chain)
        assert checked > 100


class TestSweep:
    def test_increasing_sequence(self):
        r1, r2 = pseudo_pair(list(range(1, 11)))
        assert r1.indices == tuple(range(10))
        assert 0 in r2.indices
        assert len(r1) + len(r2) >= 10

    def test_example_sequence(self):
        r1, r2 = pseudo_pair(SEQ_8)
        assert len(r1) + len(r2) >= 8
        for chain in (r1, r2):
            assert chain.indices[0] == 0
            assert _pseudo_ok(SEQ_8, chain.indices)

    def test_trace_records_iterations(self):
        trace = []
        sweep_pair(list(SEQ_8), trace)
        assert trace and all(isinstance(s, SweepState) for s in trace)
        assert [s.frontier for s in trace] == sorted(s.frontier for s in trace)

    def test_too_short(self):
        with pytest.raises(TooShort):
            pseudo_pair(TIGHT_7)

    def test_random_chains_cover_all_but_one(self, permutations_of):
        for perm in permutations_of(50, 300):
            r1, r2 = pseudo_pair(perm)
            assert len(set(r1.indices) | set(r2.indices)) >= 49
            assert len(r1) + len(r2) >= 49
            assert _pseudo_ok(perm, r1.indices)
            assert _pseudo_ok(perm, r2.indices)

    def test_strip_short_first_run(self):
        values = (5, 1, 2, 3, 0)
        assert strip_short_first_run([0, 1, 2, 3], values) == [1, 2, 3]
        assert strip_short_first_run([1, 2, 3], values) == [1, 2, 3]
        assert strip_short_first_run([0, 1], values) == []


class TestRefinePair:
    def test_first_chain_reaching_half_wins(self):
        values = list(range(1, 11))
        rc = refine_pair([0, 1], list(range(10)), values)
        assert rc.indices == tuple(range(10))

    def test_longest_valid_when_short(self):
        values = list(range(1, 11))
        rc = refine_pair([0, 1, 2], [0, 1, 2, 3], values)
        assert rc.indices == (0, 1, 2, 3)

    def test_invalid_chains_skipped(self):
        values = (1, 2, 0, 3, 4, 5)
        assert len(refine_pair([0, 1, 2, 3], [], values)) == 0

    def test_splice_at_right_end(self):
        values = [3, 1, 6, 5, 8, 9, 4, 2, 7]
        r1, r2 = sweep_pair(values)
        assert strip_short_first_run(r1, values) == [2, 3, 6, 7]
        assert strip_short_first_run(r2, values) == [1, 3, 4, 5]
        # Neither chain reaches five; the second chain ending in the first one's tail does.
        rc = refine_pair([2, 3, 6, 7], [1, 3, 4, 5], values)
        assert rc.indices == (1, 3, 4, 6, 7)
        assert [values[i] for i in rc.indices] == [1, 5, 8, 4, 2]
        half = half_rollercoaster(values)
        assert len(half) >= 5
        assert validate(values, half.indices)

    def test_splice_through_shared_point(self):
        values = [1, 4, 7, 9, 3, 6, 2, 0, 5, 8]
        rc = refine_pair([3, 5, 6], [0, 1, 3], values)
        assert rc.indices == (0, 1, 3, 5, 6)
        assert validate(values, rc.indices)

    def test_splice_swaps_first_two_points(self):
        values = [1, 3, 9, 4, 5, 2, 0, 6, 7, 8]
        r1, r2 = [2, 4, 5, 6], [0, 1, 6]
        assert validate(values, r1) and not validate(values, r2)
        rc = refine_pair(r1, r2, values)
        assert rc.indices == (0, 1, 4, 5, 6)
        assert [values[i] for i in rc.indices] == [1, 3, 5, 2, 0]


class TestHalfRollercoaster:
    def test_example_sequence(self):
        rc = half_rollercoaster(SEQ_8)
        assert len(rc) >= 4
        assert validate(SEQ_8, rc.indices)

    def test_sorted_sequence_is_kept_whole(self):
        rc = half_rollercoaster(list(range(1, 101)))
        assert len(rc) == 100

    def test_tight_example_gives_triple(self):
        rc = half_rollercoaster(TIGHT_7)
        assert len(rc) == 3
        assert validate(TIGHT_7, rc.indices)

    def test_too_short(self):
        with pytest.raises(TooShort):
            half_rollercoaster((3, 4, 1, 2))

    @pytest.mark.parametrize("n", [8, 9, 10, 11, 16, 33, 64, 100])
    def test_half_length_guarantee(self, permutations_of, n):
        for perm in permutations_of(n, 200):
            rc = half_rollercoaster(perm)
            assert validate(perm, rc.indices)
            assert len(rc) >= (n + 1) // 2

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [8 * 2 ** e for e in range(10)])
    def test_half_length_guarantee_full(self, permutations_of, n):
        for perm in permutations_of(n, 1000):
            rc = half_rollercoaster(perm)
            assert validate(perm, rc.indices)
            assert len(rc) >= (n + 1) // 2


class TestLongestMonotone:
    def test_sorted(self):
        ascending, descending = longest_monotone((1, 2, 3))
        assert ascending == [0, 1, 2]
        assert len(descending) == 1

    def test_tight_example(self):
        ascending, descending = longest_monotone(TIGHT_7)
        assert len(ascending) == 3
        assert len(descending) == 3

    def test_single_point(self):
        assert longest_monotone((7,)) == ([0], [0])

    def test_empty(self):
        with pytest.raises(EmptyWindow):
            longest_monotone(())


class TestKRollercoaster:
    def test_increasing_sequence_is_one_run(self):
        rc = k_rollercoaster(list(range(1, 11)), 4)
        assert rc.indices == tuple(range(10))

    def test_short_leftover_dropped_unless_it_closes_a_run(self):
        values = [0, 1, 2, 3, 4, -1, -2, -3, 100, 50]
        result = k_sweep(values, 4)
        assert result.states[-1].last and result.states[-1].m == 2
        assert result.rollercoaster.indices == (0, 1, 2, 3, 4)

        values = [0, 1, 2, 3, 4, -1, -2, -3, 5, 6, 7]
        result = k_sweep(values, 4)
        assert result.states[-1].last and result.states[-1].m == 3
        assert result.rollercoaster.indices == (1, 5, 6, 7, 8, 9, 10)
        assert validate(values, result.rollercoaster.indices, min_run=4)

    def test_precondition(self):
        with pytest.raises(TooShort):
            k_rollercoaster(list(range(1, 10)), 4)
        with pytest.raises(BadK):
            k_rollercoaster(list(range(1, 30)), 3)

    def test_result_records_iterations(self, permutations_of):
        perm = permutations_of(200, 1)[0]
        result = k_sweep(perm, 4)
        assert result.states
        assert all(s.m >= 1 for s in result.states)
        assert result.to_dict()["length"] == len(result.rollercoaster)

    def test_bound_n200(self, permutations_of):
        for perm in permutations_of(200, 50):
            result = k_sweep(perm, 4)
            assert validate(perm, result.rollercoaster.indices, min_run=4)
            assert len(result.rollercoaster) >= 28

    @pytest.mark.parametrize("k", [4, 5, 6])
    def test_bound(self, permutations_of, k):
        n = 20 * (k - 1) ** 2
        for perm in permutations_of(n, 50):
            result = k_sweep(perm, k)
            assert validate(perm, result.rollercoaster.indices, min_run=k)
            assert len(result.rollercoaster) >= result.guaranteed_bound

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [4, 5, 6])
    def test_bound_full(self, permutations_of, k):
        n = 20 * (k - 1) ** 2
        for perm in permutations_of(n, 500):
            result = k_sweep(perm, k)
            assert validate(perm, result.rollercoaster.indices, min_run=k)
            assert len(result.rollercoaster) >= result.guaranteed_bound
