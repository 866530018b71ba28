"""Exception types shared across the package."""


class SizeLimitError(ValueError):
    """An enumeration guard was exceeded; the message names the limit."""


class ParityError(ValueError):
    """An exponent had the wrong parity for the requested recurrence."""


class PreconditionError(ValueError):
    """An operation's hypothesis (e.g. k does not divide m) was violated."""


class DivergenceError(ValueError):
    """The requested series does not converge."""


class ConsistencyError(RuntimeError):
    """An internal exactness self-check failed; this must never fire."""
