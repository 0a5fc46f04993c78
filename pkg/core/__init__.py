"""Core types: sequences, runs, rollercoasters and the shared error hierarchy."""
from .errors import (
    AllEmpty,
    BadCaterpillar,
    BadK,
    DuplicateValue,
    EmptyWindow,
    IndexOutOfRange,
    InputParseError,
    InvalidIndices,
    NotAPermutation,
    NotGeneralPosition,
    RollerError,
    TooFewPoints,
    TooLarge,
    TooShort,
    ValidationFailed,
    WindowExhausted,
)
from .sequence import (
    Direction,
    NumberSequence,
    PointSet,
    Rollercoaster,
    Run,
    as_values,
    check_indices,
    decompose_runs,
    ensure_distinct,
    flatten_runs,
    is_rollercoaster_values,
    monotone_triple,
    run_lengths,
    to_points,
    validate,
)

__all__ = [
    "RollerError",
    "InputParseError",
    "ValidationFailed",
    "InvalidIndices",
    "DuplicateValue",
    "TooShort",
    "BadK",
    "EmptyWindow",
    "WindowExhausted",
    "IndexOutOfRange",
    "AllEmpty",
    "NotAPermutation",
    "TooLarge",
    "TooFewPoints",
    "NotGeneralPosition",
    "BadCaterpillar",
    "Direction",
    "NumberSequence",
    "PointSet",
    "Run",
    "Rollercoaster",
    "as_values",
    "check_indices",
    "ensure_distinct",
    "run_lengths",
    "is_rollercoaster_values",
    "validate",
    "decompose_runs",
    "flatten_runs",
    "to_points",
    "monotone_triple",
]
