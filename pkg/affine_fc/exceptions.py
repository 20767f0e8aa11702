"""
affine-fc Exceptions

Custom exceptions for the affine-fc library.
"""

from typing import Optional


class AffineGroupError(Exception):
    """Base exception for all affine-fc errors."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidConfigurationError(AffineGroupError):
    """Raised when group or harness configuration is invalid."""

    pass


class InvalidWindowError(AffineGroupError):
    """Raised when a window does not describe an element of the group."""

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        self.invariant = invariant


class InvalidWordError(AffineGroupError):
    """Raised when a Coxeter word cannot be parsed or has letters out of range."""

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        self.invariant = invariant


class GeneratorIndexError(AffineGroupError):
    """Raised when a generator index lies outside 1..n."""

    def __init__(self, message: str, index: Optional[int] = None, n: Optional[int] = None):
        super().__init__(message)
        self.index = index
        self.n = n


class RankMismatchError(AffineGroupError):
    """Raised when two operands live in groups of different rank."""

    def __init__(self, message: str, left: Optional[int] = None, right: Optional[int] = None):
        super().__init__(message)
        self.left = left
        self.right = right


class PreconditionError(AffineGroupError):
    """Raised when an operation is called outside its domain."""

    def __init__(self, message: str, operation: Optional[str] = None):
        super().__init__(message)
        self.operation = operation


class BudgetExceededError(AffineGroupError):
    """Raised when an enumeration grows beyond its configured budget."""

    def __init__(self, message: str, limit: Optional[int] = None, reached: Optional[int] = None):
        super().__init__(message)
        self.limit = limit
        self.reached = reached


class ClassSizeExceededError(BudgetExceededError):
    """Raised when a commutation class grows beyond the class-size cap."""

    pass


class ConsistencyError(AffineGroupError):
    """Raised when an internal mathematical invariant fails."""

    pass
