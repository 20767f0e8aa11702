"""
affine-fc

Fully commutative elements of the affine symmetric group W(Ã_{n-1}).

Elements are periodic permutations of the integers in window notation. The
package tests full commutativity four ways (commutation classes of reduced
words, inversion pairs, 321-avoidance and inversion sets of roots), computes
Shi's partition σ(w) and the two-sided cells it classifies, extends everything
to the group generated by W and the shift ρ, and verifies these descriptions
against each other on whole balls of the group.

Quick Start:
    from affine_fc import AffineGroup

    group = AffineGroup(5)

    w = group.element([2, 1, 4, 3, 5])
    group.words.is_fully_commutative(w)      # True
    group.patterns.find_321_instance(w)      # None
    group.cells.sigma(w)                     # Partition(parts=(2, 2, 1))

    summary = group.verification.run(max_length=6)
    print(summary.passed)
"""

from .exceptions import (
    AffineGroupError,
    BudgetExceededError,
    ClassSizeExceededError,
    ConsistencyError,
    GeneratorIndexError,
    InvalidConfigurationError,
    InvalidWindowError,
    InvalidWordError,
    PreconditionError,
    RankMismatchError,
)
from .group import AffineGroup
from .models import (
    AffinePermutation,
    Ball,
    CheckName,
    CheckResult,
    CheckStatus,
    CoxeterWord,
    ElementReport,
    EnumerationRecord,
    ExtendedAffinePermutation,
    OutputFormat,
    Partition,
    Root,
    VerifySummary,
)

__version__ = "0.1.0"
__license__ = "MIT"

__all__ = [
    # Main entry point
    "AffineGroup",
    # Models
    "AffinePermutation",
    "CoxeterWord",
    "Root",
    "Partition",
    "ExtendedAffinePermutation",
    "Ball",
    "CheckName",
    "CheckStatus",
    "CheckResult",
    "VerifySummary",
    "ElementReport",
    "EnumerationRecord",
    "OutputFormat",
    # Exceptions
    "AffineGroupError",
    "InvalidConfigurationError",
    "InvalidWindowError",
    "InvalidWordError",
    "GeneratorIndexError",
    "RankMismatchError",
    "PreconditionError",
    "BudgetExceededError",
    "ClassSizeExceededError",
    "ConsistencyError",
    # Version
    "__version__",
]
