"""Greedy sweep constructions: half-length rollercoasters and k-rollercoasters."""
from .k_roller import KRollerResult, KSweepState, k_rollercoaster, k_sweep, longest_monotone
from .refine import half_rollercoaster, refine_pair
from .sweep import (
    PseudoRollercoaster,
    SweepState,
    TwoChainSplit,
    pseudo_pair,
    strip_short_first_run,
    sweep_pair,
    two_chain_split,
)

__all__ = [
    "PseudoRollercoaster",
    "SweepState",
    "TwoChainSplit",
    "two_chain_split",
    "sweep_pair",
    "pseudo_pair",
    "strip_short_first_run",
    "refine_pair",
    "half_rollercoaster",
    "KSweepState",
    "KRollerResult",
    "k_sweep",
    "k_rollercoaster",
    "longest_monotone",
]
