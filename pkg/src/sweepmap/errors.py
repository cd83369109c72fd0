"""Exception types shared across the library."""


class SweepMapError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SweepMapError, ValueError):
    """A text form (path, multiset, rank list, schedule) could not be parsed."""


class ScheduleError(SweepMapError, ValueError):
    """A permutation schedule is malformed or produced a non-permutation."""


class PreconditionError(SweepMapError, ValueError):
    """An operation was called on input outside its documented domain."""


class InvariantViolation(SweepMapError, RuntimeError):
    """A runtime assertion backed by a proven fact failed.

    Seeing this on validated input means the implementation (or a caller
    bypassing validation) is broken, never the mathematics.
    """


class StepLimitExceeded(InvariantViolation):
    """A balancing loop ran past its safety cap.

    Termination is guaranteed on valid input, so the cap binding signals an
    implementation bug rather than a hard instance.
    """


class FamilyCapExceeded(SweepMapError, RuntimeError):
    """An enumeration grew past the configured cap."""


class BijectionError(SweepMapError, RuntimeError):
    """An exhaustive search found zero or several preimages where exactly one
    must exist."""
