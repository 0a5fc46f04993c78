"""
Automaton - Descent words and the finite automata that classify them.

The descent word of a permutation has an ``a`` at every ascent and a
``b`` at every descent.  A permutation is a rollercoaster exactly when
every maximal block of its descent word has length at least two.
"""

from dataclasses import dataclass
from itertools import groupby
from typing import Dict, FrozenSet, Iterable, List, Tuple

from core.errors import InputParseError, NotAPermutation

ALPHABET = ("a", "b")
DEAD = "dead"


@dataclass(frozen=True)
class DescentAutomaton:
    """Deterministic automaton over {a, b}.

    Missing transitions lead to the implicit dead state.
    """
    name: str
    states: Tuple[str, ...]
    start: str
    accepting: FrozenSet[str]
    transitions: Dict[Tuple[str, str], str]

    def step(self, state: str, letter: str) -> str:
        if letter not in ALPHABET:
            raise InputParseError(f"descent words use letters a/b, got {letter!r}")
        if state == DEAD:
            return DEAD
        return self.transitions.get((state, letter), DEAD)

    def accepts(self, word: str) -> bool:
        state = self.start
        for letter in word:
            state = self.step(state, letter)
        return state in self.accepting

    def minimized(self) -> "DescentAutomaton":
        """Merge equivalent states by partition refinement."""
        states = list(self.states)
        block = {s: int(s in self.accepting) for s in states}
        block[DEAD] = 0
        while True:
            signature = {
                s: (block[s],) + tuple(block[self.step(s, c)] for c in ALPHABET)
                for s in states
            }
            signature[DEAD] = (0, 0, 0)
            numbering: Dict[tuple, int] = {}
            refined = {}
            for s in [DEAD] + states:
                refined[s] = numbering.setdefault(signature[s], len(numbering))
            if len(set(refined.values())) == len(set(block.values())):
                break
            block = refined

        dead_block = block[DEAD]
        representative: Dict[int, str] = {}
        for s in states:
            if block[s] != dead_block:
                representative.setdefault(block[s], s)
        kept = tuple(representative[b] for b in sorted(representative))
        transitions = {}
        for s in kept:
            for c in ALPHABET:
                target = self.step(s, c)
                if block[target] != dead_block:
                    transitions[(s, c)] = representative[block[target]]
        return DescentAutomaton(
            self.name,
            kept,
            representative[block[self.start]],
            frozenset(s for s in kept if s in self.accepting),
            transitions,
        )


def rollercoaster_automaton() -> DescentAutomaton:
    """Accepts words whose maximal blocks all have length >= 2 (and the empty word)."""
    transitions = {
        ("start", "a"): "a1", ("start", "b"): "b1",
        ("a1", "a"): "a2",
        ("a2", "a"): "a2", ("a2", "b"): "b1",
        ("b1", "b"): "b2",
        ("b2", "b"): "b2", ("b2", "a"): "a1",
    }
    return DescentAutomaton(
        "rollercoaster",
        ("start", "a1", "a2", "b1", "b2"),
        "start",
        frozenset({"start", "a2", "b2"}),
        transitions,
    ).minimized()


def pattern_avoiding_automaton() -> DescentAutomaton:
    """Accepts words without the factors ``aba`` and ``bab``.

    Only the first and the last block may have length one.
    """
    transitions = {
        ("start", "a"): "a1_first", ("start", "b"): "b1_first",
        ("a1_first", "a"): "a2", ("a1_first", "b"): "b1",
        ("b1_first", "b"): "b2", ("b1_first", "a"): "a1",
        ("a1", "a"): "a2",
        ("b1", "b"): "b2",
        ("a2", "a"): "a2", ("a2", "b"): "b1",
        ("b2", "b"): "b2", ("b2", "a"): "a1",
    }
    states = ("start", "a1", "b1", "a2", "b2", "a1_first", "b1_first")
    return DescentAutomaton(
        "aba-bab-avoiding",
        states,
        "start",
        frozenset(states),
        transitions,
    ).minimized()


def descent_word(perm: Iterable[int]) -> str:
    """Descent word of a permutation of 1..n."""
    values: List[int] = list(perm)
    if not values or sorted(values) != list(range(1, len(values) + 1)):
        raise NotAPermutation("descent words are defined for permutations of 1..n, n >= 1")
    return "".join("a" if x < y else "b" for x, y in zip(values, values[1:]))


def blocks_long_enough(word: str, minimum: int = 2) -> bool:
    """Direct check that every maximal block of ``word`` has >= minimum letters."""
    for letter, group in groupby(word):
        if letter not in ALPHABET:
            raise InputParseError(f"descent words use letters a/b, got {letter!r}")
        if sum(1 for _ in group) < minimum:
            return False
    return True


def descent_word_accepted(word: str) -> bool:
    """True iff ``word`` is the descent word of some rollercoaster permutation."""
    return rollercoaster_automaton().accepts(word)
