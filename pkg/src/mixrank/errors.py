"""Semantic exception hierarchy shared by all modules."""


class MixrankError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MixrankError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InsufficientDataError(MixrankError, ValueError):
    """The sample is too short for the requested statistic."""


class DegenerateSampleError(MixrankError, ValueError):
    """The sample carries no usable information (zero variance, all zeros)."""


class TiesUnsupportedError(MixrankError, ValueError):
    """Tied magnitudes or exact zeros where a continuous sample is required."""


class SearchOverflowError(MixrankError, RuntimeError):
    """A sample-size search exceeded its budget.

    ``partial`` holds whatever results were completed before the overflow,
    so callers can report them instead of discarding the run.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []


class DataFileError(MixrankError, ValueError):
    """An input data file is missing, empty, or unparsable."""
