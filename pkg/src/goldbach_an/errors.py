"""Exception hierarchy shared by every module."""


class GoldbachAnError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(GoldbachAnError, ValueError):
    pass


class OutOfRange(GoldbachAnError, IndexError):
    """A query fell outside the range a table was built for."""


class OutOfDomain(GoldbachAnError, ValueError):
    """Arguments are valid integers but outside the range a result is stated for."""


class ResourceLimitError(GoldbachAnError):
    """The request would enumerate more objects than the configured ceiling."""


class InternalConsistencyError(GoldbachAnError, AssertionError):
    """Two constructions that must agree did not. Always a bug."""


class TheoremViolation(GoldbachAnError):
    """A verified statement failed: a counterexample or a defect in the claim.

    ``report`` carries a JSON-serializable description of the failure.
    """

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}
