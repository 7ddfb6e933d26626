"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """Requested size exceeds a configured memory/time budget."""


class PrecisionError(ArithmeticError):
    """Working precision is insufficient for the requested computation."""


class TruncationError(ArithmeticError):
    """Series truncation cannot certify the requested tolerance."""

    def __init__(self, message, achieved_bound=None):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class MethodDisagreementError(ArithmeticError):
    """Two independent evaluation routes disagree beyond tolerance."""
