class EulerSumError(Exception):
    """Base class for library errors."""


class DomainError(EulerSumError, ValueError):
    """An argument lies outside the domain an operation supports."""


class ZeroConstantTerm(EulerSumError, ZeroDivisionError):
    """A power series with zero constant term has no reciprocal."""


class ToleranceNotMet(EulerSumError, ArithmeticError):
    """The term or node budget ran out before the requested tolerance was certified."""
