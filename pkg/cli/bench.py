"""
Bench - Timing ladder over doubling input sizes.
"""

import logging
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from core.errors import BadK, InputParseError
from counting import count_accepted, rollercoaster_automaton
from greedy import half_rollercoaster, k_sweep
from longest import longest_rollercoaster, longest_rollercoaster_perm
from utils import make_rng, random_permutation, trial_seeds

logger = logging.getLogger(__name__)

TARGETS = ("greedy", "longest", "longest-perm", "kroller", "count")


@dataclass
class BenchRow:
    n: int
    trials: int
    median_seconds: float
    min_seconds: float

    def to_dict(self):
        return {
            "n": self.n,
            "trials": self.trials,
            "median_seconds": self.median_seconds,
            "min_seconds": self.min_seconds,
        }


def run_trial(target: str, n: int, seed: int, k: int) -> float:
    """Time one call of ``target`` on input size n; input generation is not timed."""
    if target == "count":
        automaton = rollercoaster_automaton()
        start = time.perf_counter()
        count_accepted(automaton, n)
        return time.perf_counter() - start

    values = random_permutation(n, make_rng(seed, stream=n))
    start = time.perf_counter()
    if target == "greedy":
        half_rollercoaster(values)
    elif target == "longest":
        longest_rollercoaster(values)
    elif target == "longest-perm":
        longest_rollercoaster_perm(values)
    else:
        k_sweep(values, k)
    return time.perf_counter() - start


def ladder(min_exp: int, max_exp: int) -> List[int]:
    if min_exp < 0 or max_exp < min_exp:
        raise InputParseError(f"bad exponent range {min_exp}..{max_exp}")
    return [2 ** e for e in range(min_exp, max_exp + 1)]


def run_bench(target: str, seed: int, trials: int, min_exp: int, max_exp: int,
              k: int = 4, threads: Optional[int] = None) -> List[BenchRow]:
    """Median wall time per n over a doubling ladder.

    Args:
        target: One of TARGETS.
        seed: Master seed; trial t at size n uses stream n of trial seed t.
        trials: Trials per size.
        min_exp: Smallest size is 2**min_exp.
        max_exp: Largest size is 2**max_exp.
        k: Run length for the kroller target.
        threads: Worker processes; 1 runs serially.

    Returns:
        One BenchRow per size.
    """
    if target not in TARGETS:
        raise InputParseError(f"unknown bench target {target!r}")
    if trials < 1:
        raise InputParseError(f"--trials must be >= 1, got {trials}")
    if target == "kroller" and k < 4:
        raise BadK(f"k must be >= 4, got {k}")
    sizes = ladder(min_exp, max_exp)
    if target == "greedy":
        sizes = [n for n in sizes if n >= 5]
    elif target == "kroller":
        sizes = [n for n in sizes if n > (k - 1) ** 2]
    seeds = trial_seeds(seed, trials)
    workers = max(1, min(threads or 1, trials))

    rows = []
    for n in sizes:
        jobs = [(target, n, s, k) for s in seeds]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                times = list(pool.map(run_trial, *zip(*jobs)))
        else:
            times = [run_trial(*job) for job in jobs]
        row = BenchRow(n, trials, statistics.median(times), min(times))
        logger.info("bench %s n=%d median %.6fs", target, n, row.median_seconds)
        rows.append(row)
    return rows
