"""Exception types raised across the package."""


class InputError(ValueError):
    """Invalid user-supplied argument (range, shape, unknown label)."""


class NumericError(ArithmeticError):
    """A numerical routine failed to produce a trustworthy result."""
