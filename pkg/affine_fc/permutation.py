"""
Window-notation arithmetic for the affine symmetric group W(Ã_{n-1}).

Elements are permutations w of the integers with w(t + n) = w(t) + n and
w(1) + ... + w(n) = n(n+1)/2, stored as the window (w(1), ..., w(n)).
Generator s_i (1 <= i <= n) exchanges the residue classes of i and i + 1;
s_n is the affine node and exchanges the classes of n and 1.

Products are composition of functions: compose(u, v)(t) = u(v(t)).
"""

import logging
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .exceptions import (
    BudgetExceededError,
    GeneratorIndexError,
    InvalidWindowError,
    PreconditionError,
    RankMismatchError,
)
from .models import MIN_RANK, AffinePermutation, Ball, CoxeterWord, window_problem

logger = logging.getLogger(__name__)

Window = Tuple[int, ...]


def residue(t: int, n: int) -> int:
    """Representative of t modulo n in 1..n."""
    return (t - 1) % n + 1


def apply_window(window: Sequence[int], t: int) -> int:
    """Value at t of the periodic permutation with the given window."""
    n = len(window)
    q, r = divmod(t - 1, n)
    return window[r] + q * n


def require_rank(n: int) -> None:
    if n < MIN_RANK:
        raise InvalidWindowError(f"rank must be at least {MIN_RANK}, got {n}", invariant="rank")


def require_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise GeneratorIndexError(f"generator index {i} outside 1..{n}", index=i, n=n)


def require_same_rank(left: int, right: int) -> None:
    if left != right:
        raise RankMismatchError(
            f"rank mismatch: {left} vs {right}", left=left, right=right
        )


def is_valid_window(n: int, values: Iterable[int]) -> Optional[str]:
    """
    Check a candidate window of W.

    Returns:
        None if valid, otherwise the name of the violated invariant
    """
    problem = window_problem(n, tuple(values))
    return problem[0] if problem else None


# Group arithmetic


def identity(n: int) -> AffinePermutation:
    """The identity element, window (1, 2, ..., n)."""
    require_rank(n)
    return AffinePermutation.trusted(n, tuple(range(1, n + 1)))


def _generator_value(n: int, i: int, t: int) -> int:
    r = residue(t, n)
    if r == i:
        return t + 1
    if r == residue(i + 1, n):
        return t - 1
    return t


def generator(n: int, i: int) -> AffinePermutation:
    """
    The Coxeter generator s_i.

    >>> generator(3, 3).window
    (0, 2, 4)
    """
    require_rank(n)
    require_index(n, i)
    return AffinePermutation.trusted(n, tuple(_generator_value(n, i, t) for t in range(1, n + 1)))


def apply(w: AffinePermutation, t: int) -> int:
    """w(t) for any integer t."""
    return apply_window(w.window, t)


def compose_windows(u: Sequence[int], v: Sequence[int]) -> Window:
    return tuple(apply_window(u, vt) for vt in v)


def invert_window(window: Sequence[int]) -> Window:
    n = len(window)
    inverse = [0] * n
    for position, value in enumerate(window, start=1):
        r = residue(value, n)
        inverse[r - 1] = position - (value - r)
    return tuple(inverse)


def compose(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """The product u·v, acting as t ↦ u(v(t))."""
    require_same_rank(u.n, v.n)
    return AffinePermutation.trusted(u.n, compose_windows(u.window, v.window))


def inverse(w: AffinePermutation) -> AffinePermutation:
    return AffinePermutation.trusted(w.n, invert_window(w.window))


def right_swap(window: Window, i: int) -> Window:
    # window of w·s_i: exchange w(i) and w(i+1)
    n = len(window)
    values = list(window)
    if i < n:
        values[i - 1], values[i] = values[i], values[i - 1]
    else:
        values[n - 1], values[0] = window[0] + n, window[n - 1] - n
    return tuple(values)


def right_multiply(w: AffinePermutation, i: int) -> AffinePermutation:
    """w·s_i."""
    require_index(w.n, i)
    return AffinePermutation.trusted(w.n, right_swap(w.window, i))


def left_multiply(w: AffinePermutation, i: int) -> AffinePermutation:
    """s_i·w."""
    require_index(w.n, i)
    return AffinePermutation.trusted(
        w.n, tuple(_generator_value(w.n, i, value) for value in w.window)
    )


# Descents and length


def has_descent_at(window: Window, i: int) -> bool:
    return apply_window(window, i) > apply_window(window, i + 1)


def is_right_descent(w: AffinePermutation, i: int) -> bool:
    """True iff w(i) > w(i+1), i.e. ℓ(w·s_i) < ℓ(w)."""
    require_index(w.n, i)
    return has_descent_at(w.window, i)


def is_left_descent(w: AffinePermutation, i: int) -> bool:
    """True iff w⁻¹(i) > w⁻¹(i+1), i.e. ℓ(s_i·w) < ℓ(w)."""
    require_index(w.n, i)
    return has_descent_at(invert_window(w.window), i)


def right_descents(w: AffinePermutation) -> List[int]:
    return [i for i in range(1, w.n + 1) if has_descent_at(w.window, i)]


def left_descents(w: AffinePermutation) -> List[int]:
    inverse_window = invert_window(w.window)
    return [i for i in range(1, w.n + 1) if has_descent_at(inverse_window, i)]


def _strip_descents(window: Window) -> List[int]:
    """Right-multiply by the smallest descent until the identity; return the indices used."""
    n = len(window)
    stripped: List[int] = []
    current = window
    while True:
        for i in range(1, n + 1):
            if has_descent_at(current, i):
                stripped.append(i)
                current = right_swap(current, i)
                break
        else:
            return stripped


def length(w: AffinePermutation) -> int:
    """ℓ(w), by greedy descent stripping."""
    return len(_strip_descents(w.window))


def inversion_count(w: AffinePermutation) -> int:
    """
    Class inversion number: pairs (i, j) with 1 <= i <= n, i < j and w(i) > w(j).

    An inversion (i, j) has j - i < n + M where M is the spread of the window,
    so the scan over j is finite.
    """
    window = w.window
    spread = max(window) - min(window)
    count = 0
    for i in range(1, w.n + 1):
        wi = window[i - 1]
        for j in range(i + 1, i + spread + w.n + 1):
            if apply_window(window, j) < wi:
                count += 1
    return count


def canonical_reduced_word(w: AffinePermutation) -> CoxeterWord:
    """
    Reduced word for w, always stripping the smallest descent first.

    >>> str(canonical_reduced_word(AffinePermutation.from_window([2, 3, 1])))
    '1.2'
    """
    stripped = _strip_descents(w.window)
    return CoxeterWord.model_construct(n=w.n, letters=tuple(reversed(stripped)))


# Enumeration


def enumerate_ball(n: int, max_length: int, budget: Optional[int] = None) -> Ball:
    """
    All elements of length at most ``max_length``, by breadth-first search.

    Each frontier is expanded by right multiplication with every generator and
    deduplicated on the window, so the depth of an element is its length.

    Args:
        n: Rank
        max_length: Length bound L >= 0
        budget: Maximum ball size; None for no limit

    Raises:
        BudgetExceededError: If the ball would hold more than ``budget`` elements
    """
    require_rank(n)
    if max_length < 0:
        raise PreconditionError(
            f"length bound must be non-negative, got {max_length}", operation="enumerate_ball"
        )

    start = tuple(range(1, n + 1))
    seen: Set[Window] = {start}
    layers: List[List[Window]] = [[start]]
    for depth in range(1, max_length + 1):
        frontier: Set[Window] = set()
        for window in layers[-1]:
            for i in range(1, n + 1):
                candidate = right_swap(window, i)
                if candidate not in seen:
                    seen.add(candidate)
                    frontier.add(candidate)
        if budget is not None and len(seen) > budget:
            raise BudgetExceededError(
                f"ball of rank {n} and radius {max_length} exceeds budget {budget} "
                f"at length {depth}",
                limit=budget,
                reached=len(seen),
            )
        layers.append(sorted(frontier))
        logger.debug("rank %d: %d elements of length %d", n, len(frontier), depth)

    return Ball(
        n=n,
        max_length=max_length,
        layers=tuple(
            tuple(AffinePermutation.trusted(n, window) for window in layer) for layer in layers
        ),
    )
