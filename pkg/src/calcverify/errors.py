"""Shared exception types."""


class CalcVerifyError(Exception):
    """Base class for all calcverify errors."""


class DomainError(CalcVerifyError):
    """An argument lies outside the mathematical domain of the operation."""


class CapabilityError(CalcVerifyError):
    """The request exceeds the supported size or conditioning range."""


class NumericError(CalcVerifyError):
    """A computation hit a non-finite value or a degenerate configuration."""


class TableError(CalcVerifyError):
    """A rule table file is malformed or fails invariant validation."""
