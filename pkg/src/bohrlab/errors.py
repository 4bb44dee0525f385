"""Exception types raised by bohrlab."""


class BohrLabError(Exception):
    """Base class for all bohrlab errors."""


class DomainError(BohrLabError, ValueError):
    """A parameter lies outside the admissible domain."""


class ContractError(BohrLabError, ValueError):
    """A call violates an operation's precondition."""


class DivergenceError(BohrLabError, ValueError):
    """The requested series does not converge at the given radius."""


class TruncationError(BohrLabError):
    """The stored coefficients cannot reach the requested tolerance."""


class BracketError(BohrLabError):
    """The residual does not change sign over the bracket."""


class NumericError(BohrLabError):
    """A non-finite value appeared during a computation."""
