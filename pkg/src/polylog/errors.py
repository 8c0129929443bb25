"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class CapacityError(ValueError):
    """Requested weight or order exceeds a configured cap."""


class ShapeError(ValueError):
    """Mismatched truncation orders in series arithmetic."""


class EvaluationError(LookupError):
    """A constant atom has no numeric value in the evaluation context."""


class ConvergenceError(RuntimeError):
    """An iterative numeric routine exhausted its budget.

    The best partial estimate, when one exists, is kept in ``partial``.
    """

    def __init__(self, message: str, partial: float | None = None):
        super().__init__(message)
        self.partial = partial
