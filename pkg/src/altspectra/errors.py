"""Exceptions shared across modules."""


class OrderCapError(RuntimeError):
    """A requested computation exceeds its configured size cap."""


class ConvergenceError(RuntimeError):
    """An iterative solve ran out of iterations; carries the last residual."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual
