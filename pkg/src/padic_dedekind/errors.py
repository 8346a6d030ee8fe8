"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An argument violates the hypothesis of the operation it was passed to."""


class PrecisionError(ArithmeticError):
    """Working p-adic precision ran out before the requested accuracy was reached.

    ``required`` carries the working precision that would have been needed,
    when it can be estimated.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required
