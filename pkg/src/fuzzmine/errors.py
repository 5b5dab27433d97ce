"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input-data problems exit with 2,
configuration problems with 3 (usage errors are handled by argparse and
exit with 1).
"""


class FuzzmineError(Exception):
    """Base class for all errors raised by this package."""


class InputError(FuzzmineError):
    """A problem with the event-stream input data."""


class ParseError(InputError):
    """Malformed CSV content. Carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StreamDataError(InputError):
    """Well-formed CSV whose values violate stream constraints."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigError(FuzzmineError):
    """Invalid pipeline configuration (schema, roles, or vocabularies)."""


class UndefinedMetricError(FuzzmineError):
    """A metric was requested on a rule set whose denominator is zero."""
