"""Exception types shared across the package."""


class PellTribError(Exception):
    """Base class for errors raised by this package."""


class PrecisionError(PellTribError, ArithmeticError):
    """A certified decision could not be made within the precision cap."""


class DomainError(PellTribError, ArithmeticError):
    """An operation was applied outside its mathematical domain."""


class ConsistencyError(PellTribError):
    """Two independent certified computations disagree (internal bug)."""


class ReductionFailedError(PellTribError):
    """No tried convergent produced a certified positive xi.

    Carries the list of tried convergents so the caller can widen the
    budget or inspect the failure.
    """

    def __init__(self, message, tried):
        super().__init__(message)
        self.tried = tried


class DiscrepancyError(PellTribError):
    """A recomputed constant is not dominated by its reference value."""
