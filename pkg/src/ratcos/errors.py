"""Exception types shared across the package."""


class CapExceededError(Exception):
    """A configured size cap (degree, factorization, shift search) was hit.

    Raised loudly instead of degrading results; callers can retry with a
    larger cap or a smaller problem.
    """


class InvalidInputError(ValueError):
    """User-supplied data violates a documented precondition."""
