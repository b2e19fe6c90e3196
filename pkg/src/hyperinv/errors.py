"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when an input fails a structural or numerical precondition."""


class BudgetError(RuntimeError):
    """Raised when a permutation-sum evaluation would exceed the leaf budget."""
