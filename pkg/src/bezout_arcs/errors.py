"""Exception types raised on domain violations."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotCoprimeError(DomainError):
    pass


class MagnitudeError(DomainError):
    """An argument is too small in absolute value (e.g. q = 1 for B1)."""


class ZeroInputError(DomainError):
    pass


class ConsistencyError(AssertionError):
    """Two independent computations disagreed. Always a bug, never user error."""
