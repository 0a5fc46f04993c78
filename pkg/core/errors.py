"""
Errors - Exception hierarchy shared by every module.

Each error carries the process exit code the CLI reports for it.
"""


class RollerError(Exception):
    """Base class for all toolkit errors (precondition violations by default)."""

    exit_code = 3


class InputParseError(RollerError):
    """Malformed input file or text."""

    exit_code = 2


class ValidationFailed(RollerError):
    """A produced result failed its validator."""

    exit_code = 4


class InvalidIndices(RollerError):
    """Index list is out of bounds or not strictly increasing."""


class DuplicateValue(RollerError):
    """A value occurs twice where distinct values are required."""


class TooShort(RollerError):
    """Input sequence is shorter than the operation requires."""


class BadK(RollerError):
    """Run threshold k outside the supported range."""


class EmptyWindow(RollerError):
    """An operation received an empty window of points."""


class WindowExhausted(RollerError):
    """Sweep ran out of points before a closing 3-descent was found."""


class IndexOutOfRange(RollerError):
    """Cell or position index outside the structure's capacity."""


class AllEmpty(RollerError):
    """Queried range holds no non-empty entry."""


class NotAPermutation(RollerError):
    """Input is not a permutation of 1..n."""


class TooLarge(RollerError):
    """Input exceeds the size an exhaustive method accepts."""


class TooFewPoints(RollerError):
    """Point set is too small for the requested drawing."""


class NotGeneralPosition(RollerError):
    """Two points share an x- or a y-coordinate."""


class BadCaterpillar(RollerError):
    """Caterpillar size is not of the form 3s - 4 with s >= 2."""
