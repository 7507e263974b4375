"""Exception hierarchy shared by all modules."""


class StableHCMError(Exception):
    """Base class for every error raised by the package."""


class DomainError(StableHCMError, ValueError):
    """An argument lies outside the domain of the function."""


class BadRange(DomainError):
    """Grid endpoints or counts are inconsistent."""


class GridTooSmall(DomainError):
    """Not enough nodes for the requested stencil."""


class NonConvergence(StableHCMError, ArithmeticError):
    """Adaptive quadrature or an iterative solve failed to reach tolerance."""


class NonFiniteSample(StableHCMError, ArithmeticError):
    """An evaluator returned NaN or an infinity."""


class CancellationOverflow(StableHCMError, ArithmeticError):
    """A series lost too many digits to cancellation."""


class OverflowRisk(StableHCMError, OverflowError):
    """A log-domain value is too large to be returned as a plain float."""


class EndpointMismatch(StableHCMError):
    """A theta table does not reach its limiting value at the right end."""


class NotMonotone(StableHCMError):
    """A table expected to be monotone violates monotonicity."""
