"""
affine-fc Models

Pydantic models for group elements, words, roots, partitions and the
records emitted by the command-line reports.
"""

from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .exceptions import InvalidWindowError
from .utils import format_extended, format_partition, format_vector, format_window, format_word

MIN_RANK = 3


def window_problem(
    n: int, values: Tuple[int, ...], require_sum: bool = True
) -> Optional[Tuple[str, str]]:
    """
    Return ``(invariant, message)`` for the first window invariant ``values`` violates.

    Args:
        n: Rank of the group
        values: Candidate window entries w(1), ..., w(n)
        require_sum: Whether the entries must sum to n(n+1)/2 (elements of W, not of Ŵ)

    Returns:
        None when ``values`` is a valid window
    """
    if n < MIN_RANK:
        return "rank", f"rank must be at least {MIN_RANK}, got {n}"
    if len(values) != n:
        return "length", f"window needs {n} entries, got {len(values)}"
    seen: Dict[int, int] = {}
    for position, value in enumerate(values, start=1):
        r = value % n
        if r in seen:
            return (
                "residue collision",
                f"residue collision: w({seen[r]})={values[seen[r] - 1]} and "
                f"w({position})={value} are congruent modulo {n}",
            )
        seen[r] = position
    if require_sum and sum(values) != n * (n + 1) // 2:
        return "window sum", f"window sum must be {n * (n + 1) // 2}, got {sum(values)}"
    return None


class CheckName(str, Enum):
    """Checks run by the verification harness."""

    THM27 = "thm27"
    CELLS = "cells"
    LEMMA25 = "lemma25"
    LEMMA42 = "lemma42"
    PROP23 = "prop23"
    PROP51 = "prop51"
    SIGMA_INVERSE = "sigma-inverse"
    DK_WINDOW = "dk-window"
    ALL = "all"


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASSED = "passed"
    FAILED = "failed"
    INCOMPLETE = "incomplete"
    SKIPPED = "skipped"


class OutputFormat(str, Enum):
    """Record formats for eval and enumerate."""

    TSV = "tsv"
    JSONL = "jsonl"


# Domain Models


class AffinePermutation(BaseModel):
    """
    Element of W(Ã_{n-1}) in window notation.

    ``window[t - 1]`` holds w(t) for t = 1..n; the value at any other integer
    follows from w(t + kn) = w(t) + kn.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    window: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_window(self) -> "AffinePermutation":
        problem = window_problem(self.n, self.window)
        if problem:
            raise ValueError(problem[1])
        return self

    @classmethod
    def from_window(cls, values: Any, n: Optional[int] = None) -> "AffinePermutation":
        """
        Build an element from window entries, naming the violated invariant on failure.

        Raises:
            InvalidWindowError: If the entries do not form a window of W
        """
        window = tuple(int(v) for v in values)
        rank = len(window) if n is None else n
        problem = window_problem(rank, window)
        if problem:
            raise InvalidWindowError(problem[1], invariant=problem[0])
        return cls.model_construct(n=rank, window=window)

    @classmethod
    def trusted(cls, n: int, window: Tuple[int, ...]) -> "AffinePermutation":
        """Wrap a window already known to be valid (skips validation)."""
        return cls.model_construct(n=n, window=window)

    def __call__(self, t: int) -> int:
        q, r = divmod(t - 1, self.n)
        return self.window[r] + q * self.n

    def __str__(self) -> str:
        return format_window(self.window)


class CoxeterWord(BaseModel):
    """Finite sequence of generator indices in 1..n."""

    model_config = ConfigDict(frozen=True)

    n: int
    letters: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_letters(self) -> "CoxeterWord":
        if self.n < MIN_RANK:
            raise ValueError(f"rank must be at least {MIN_RANK}, got {self.n}")
        for letter in self.letters:
            if not 1 <= letter <= self.n:
                raise ValueError(f"letter {letter} outside 1..{self.n}")
        return self

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters)


class Root(BaseModel):
    """Integer coefficient vector over the simple roots α_1..α_n of Ã_{n-1}."""

    model_config = ConfigDict(frozen=True)

    n: int
    coeffs: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_coeffs(self) -> "Root":
        if len(self.coeffs) != self.n:
            raise ValueError(f"root needs {self.n} coefficients, got {len(self.coeffs)}")
        return self

    @property
    def is_positive(self) -> bool:
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)

    @property
    def is_negative(self) -> bool:
        return any(self.coeffs) and all(c <= 0 for c in self.coeffs)

    def __add__(self, other: "Root") -> "Root":
        return Root.model_construct(
            n=self.n, coeffs=tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "Root":
        return Root.model_construct(n=self.n, coeffs=tuple(-c for c in self.coeffs))

    def __str__(self) -> str:
        return format_vector(self.coeffs)


class Partition(BaseModel):
    """Weakly decreasing sequence of positive integers."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...]

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return parts

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return format_partition(self.parts)


class ExtendedAffinePermutation(BaseModel):
    """Element ρ^z · w of the extended group Ŵ, stored in decomposed form."""

    model_config = ConfigDict(frozen=True)

    z: int
    body: AffinePermutation

    @property
    def n(self) -> int:
        return self.body.n

    @property
    def window(self) -> Tuple[int, ...]:
        return tuple(v + self.z for v in self.body.window)

    def __call__(self, t: int) -> int:
        return self.body(t) + self.z

    def __str__(self) -> str:
        return format_extended(self.z, self.body.window)


class Ball(BaseModel):
    """All elements of length at most ``max_length``, one layer per length."""

    model_config = ConfigDict(frozen=True)

    n: int
    max_length: int
    layers: Tuple[Tuple[AffinePermutation, ...], ...]

    @property
    def counts(self) -> List[int]:
        return [len(layer) for layer in self.layers]

    def elements(self) -> Iterator[AffinePermutation]:
        """Elements in (length, window) order."""
        for layer in self.layers:
            yield from layer

    def with_lengths(self) -> Iterator[Tuple[int, AffinePermutation]]:
        for length, layer in enumerate(self.layers):
            for w in layer:
                yield length, w

    def __len__(self) -> int:
        return sum(self.counts)


# Report Models


class ElementReport(BaseModel):
    """Record produced by ``affine-fc eval``."""

    n: int
    window: str
    length: int
    word: str
    fc: bool
    predicates: Optional[Dict[str, bool]] = None
    sigma: str
    witness: Optional[str] = None


class EnumerationRecord(BaseModel):
    """Record produced by ``affine-fc enumerate``."""

    window: str
    length: int
    fc: bool
    sigma: str


class CheckResult(BaseModel):
    """Outcome of one verification check."""

    name: CheckName
    status: CheckStatus
    population: int = 0
    failures: int = 0
    failure_samples: List[str] = Field(default_factory=list)
    elapsed: float = 0.0
    note: Optional[str] = None


class VerifySummary(BaseModel):
    """All check results of one ``affine-fc verify`` run."""

    n: int
    max_length: int
    ball_budget: int
    window_radius: int
    checks: List[CheckResult] = Field(default_factory=list)
    counts_by_length: List[int] = Field(default_factory=list)
    fc_counts_by_length: List[int] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status in (CheckStatus.PASSED, CheckStatus.SKIPPED) for c in self.checks)

    @property
    def exit_code(self) -> int:
        statuses = {c.status for c in self.checks}
        if CheckStatus.FAILED in statuses:
            return 1
        if CheckStatus.INCOMPLETE in statuses:
            return 3
        return 0
