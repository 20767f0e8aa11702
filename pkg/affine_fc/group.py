"""
affine-fc Group

Main entry point: a rank-n affine symmetric group with its configuration and
topic resources.
"""

import logging
from typing import Optional, Sequence, Union

from .exceptions import InvalidConfigurationError, InvalidWordError, RankMismatchError
from .models import MIN_RANK, AffinePermutation, Ball, CoxeterWord
from .permutation import enumerate_ball, generator, identity
from .utils import parse_window, parse_word

logger = logging.getLogger(__name__)


class AffineGroup:
    """
    The affine symmetric group W(Ã_{n-1}).

    Usage:
        from affine_fc import AffineGroup

        group = AffineGroup(4)

        w = group.parse("[2,1,4,3]")
        group.words.is_fully_commutative(w)
        group.cells.sigma(w)

        summary = group.verification.run(max_length=6)

    Attributes:
        words: Reduced words and commutation classes
        patterns: 321-avoidance and the inversion-pair criterion
        roots: Root action and inversion sets
        cells: Shi's partition and two-sided cells
        extended: The extended group generated by W and ρ
        verification: Exhaustive checks over a ball
    """

    DEFAULT_BALL_BUDGET = 250_000
    DEFAULT_CLASS_CAP = 1_000_000
    DEFAULT_WINDOW_RADIUS = 3

    def __init__(
        self,
        n: int,
        ball_budget: Optional[int] = None,
        class_cap: Optional[int] = None,
        window_radius: Optional[int] = None,
        show_progress: bool = False,
    ):
        """
        Initialize the group.

        Args:
            n: Rank, at least 3
            ball_budget: Maximum number of elements in an enumerated ball (default: 250,000)
            class_cap: Maximum commutation-class size (default: 1,000,000)
            window_radius: Radius multiplier of the brute-force oracles (default: 3)
            show_progress: Show progress bars on stderr during verification

        Raises:
            InvalidConfigurationError: If any setting is out of range
        """
        if n < MIN_RANK:
            raise InvalidConfigurationError(f"rank must be at least {MIN_RANK}, got {n}")
        self.n = n
        self.ball_budget = self.DEFAULT_BALL_BUDGET if ball_budget is None else ball_budget
        self.class_cap = self.DEFAULT_CLASS_CAP if class_cap is None else class_cap
        self.window_radius = self.DEFAULT_WINDOW_RADIUS if window_radius is None else window_radius
        self.show_progress = show_progress

        for name in ("ball_budget", "class_cap", "window_radius"):
            if getattr(self, name) < 1:
                raise InvalidConfigurationError(f"{name} must be positive, got {getattr(self, name)}")

        # Resources are created on first use
        self._words = None
        self._patterns = None
        self._roots = None
        self._cells = None
        self._extended = None
        self._verification = None

    @property
    def words(self):
        """Word resource."""
        if self._words is None:
            from .resources.words import WordResource

            self._words = WordResource(self)
        return self._words

    @property
    def patterns(self):
        """Pattern resource."""
        if self._patterns is None:
            from .resources.patterns import PatternResource

            self._patterns = PatternResource(self)
        return self._patterns

    @property
    def roots(self):
        """Root resource."""
        if self._roots is None:
            from .resources.roots import RootResource

            self._roots = RootResource(self)
        return self._roots

    @property
    def cells(self):
        """Cell resource."""
        if self._cells is None:
            from .resources.cells import CellResource

            self._cells = CellResource(self)
        return self._cells

    @property
    def extended(self):
        """Extended-group resource."""
        if self._extended is None:
            from .resources.extended import ExtendedResource

            self._extended = ExtendedResource(self)
        return self._extended

    @property
    def verification(self):
        """Verification harness."""
        if self._verification is None:
            from .resources.verification import VerificationResource

            self._verification = VerificationResource(self)
        return self._verification

    def check_rank(self, x) -> None:
        """
        Raises:
            RankMismatchError: If ``x`` belongs to a group of another rank
        """
        if x.n != self.n:
            raise RankMismatchError(
                f"{type(x).__name__} of rank {x.n} used with a group of rank {self.n}",
                left=self.n,
                right=x.n,
            )

    # Elements

    def identity(self) -> AffinePermutation:
        return identity(self.n)

    def generator(self, i: int) -> AffinePermutation:
        return generator(self.n, i)

    def element(self, values: Sequence[int]) -> AffinePermutation:
        """
        Element with the given window.

        Raises:
            InvalidWindowError: Naming the violated invariant
        """
        return AffinePermutation.from_window(values, n=self.n)

    def word(self, letters: Sequence[int]) -> CoxeterWord:
        """
        Raises:
            InvalidWordError: If a letter lies outside 1..n
        """
        letters = tuple(int(letter) for letter in letters)
        bad = [letter for letter in letters if not 1 <= letter <= self.n]
        if bad:
            raise InvalidWordError(
                f"letter {bad[0]} outside 1..{self.n}", invariant="letter range"
            )
        return CoxeterWord.model_construct(n=self.n, letters=letters)

    def parse(self, text: str) -> Union[AffinePermutation, CoxeterWord]:
        """
        Parse ``[2,1,3]`` as a window or ``1.2.1`` as a word.

        Raises:
            InvalidWindowError: For malformed or invalid windows
            InvalidWordError: For malformed words or letters out of range
        """
        if text.strip().startswith("["):
            return self.element(parse_window(text))
        return self.word(parse_word(text))

    def ball(self, max_length: int) -> Ball:
        """
        All elements of length at most ``max_length``.

        Raises:
            BudgetExceededError: If the ball exceeds ``ball_budget``
        """
        ball = enumerate_ball(self.n, max_length, budget=self.ball_budget)
        logger.debug("ball of rank %d and radius %d: %s", self.n, max_length, ball.counts)
        return ball

    def __enter__(self):
        """Context manager entry."""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Context manager exit: drops the verification memo."""
        if self._verification is not None:
            self._verification.clear()
        return None

    def __repr__(self):
        """String representation."""
        return (
            f"AffineGroup(n={self.n}, ball_budget={self.ball_budget}, "
            f"class_cap={self.class_cap}, window_radius={self.window_radius})"
        )
