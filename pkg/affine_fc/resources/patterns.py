"""
Pattern Resource

321-avoidance and the inversion-pair criterion, read directly off the window.

Every search here relies on w(t + n) = w(t) + n, so the helpers that take a
raw window also work for windows of the extended group.
"""

from typing import Optional, Sequence, Tuple

from ..exceptions import PreconditionError
from ..models import AffinePermutation
from ..permutation import apply_window, residue

Triple = Tuple[int, int, int]

DEFAULT_ORACLE_RADIUS = 3


def find_321_in_window(window: Sequence[int]) -> Optional[Triple]:
    """
    Bounded 321 search: b in 1..n, b - n < a < b, b < c < b + n.

    Returns the lexicographically smallest (b, c - b, b - a) witness as (a, b, c).
    """
    n = len(window)
    for b in range(1, n + 1):
        wb = window[b - 1]
        for dc in range(1, n):
            if apply_window(window, b + dc) >= wb:
                continue
            for da in range(1, n):
                if apply_window(window, b - da) > wb:
                    return b - da, b, b + dc
    return None


def has_321_pattern(window: Sequence[int]) -> bool:
    return find_321_in_window(window) is not None


def find_321_instance(w: AffinePermutation) -> Optional[Triple]:
    """
    A witness a < b < c with w(a) > w(b) > w(c), or None when w is 321-avoiding.

    Any witness returned has 1 <= b <= n, 0 < b - a < n and 0 < c - b < n.
    """
    return find_321_in_window(w.window)


def is_321_avoiding(w: AffinePermutation) -> bool:
    return find_321_in_window(w.window) is None


def normalize_triple(w: AffinePermutation, a: int, b: int, c: int) -> Triple:
    """
    Move a and c by multiples of n to within distance n of b, keeping the pattern.

    Lowering c by kn lowers w(c) by kn and raising a by kn raises w(a) by kn.

    Raises:
        PreconditionError: If (a, b, c) is not an occurrence of 321 in w
    """
    if not (a < b < c and w(a) > w(b) > w(c)):
        raise PreconditionError(
            f"({a},{b},{c}) is not a 321 occurrence in {w}", operation="normalize_triple"
        )
    n = w.n
    a_prime = b - (b - a) % n
    c_prime = b + (c - b) % n
    return a_prime, b, c_prime


def condition_ii_in_window(window: Sequence[int]) -> bool:
    """
    Every inversion a < b, w(a) > w(b), has w(a) > a and w(b) < b.

    Translating the pair by n changes nothing, so b ranges over 1..n. For fixed b,
    replacing a by a + kn with b - n < a + kn < b keeps the inversion and keeps
    w(a) <= a if that held, so a ranges over (b - n, b).
    """
    n = len(window)
    for b in range(1, n + 1):
        wb = window[b - 1]
        for a in range(b - n + 1, b):
            wa = apply_window(window, a)
            if wa > wb and (wa <= a or wb >= b):
                return False
    return True


def condition_ii_holds(w: AffinePermutation) -> bool:
    return condition_ii_in_window(w.window)


# Brute-force oracles over a wide window of positions


def _oracle_positions(n: int, radius: int) -> range:
    return range(1 - radius * n, radius * n + n + 1)


def find_321_bruteforce(w: AffinePermutation, radius: int = DEFAULT_ORACLE_RADIUS) -> Optional[Triple]:
    """Unrestricted 321 search over positions in [1 - radius·n, radius·n + n]."""
    positions = list(_oracle_positions(w.n, radius))
    values = [w(t) for t in positions]
    for j in range(len(positions)):
        left = next((i for i in range(j) if values[i] > values[j]), None)
        if left is None:
            continue
        right = next((k for k in range(j + 1, len(positions)) if values[k] < values[j]), None)
        if right is not None:
            return positions[left], positions[j], positions[right]
    return None


def is_321_avoiding_bruteforce(w: AffinePermutation, radius: int = DEFAULT_ORACLE_RADIUS) -> bool:
    return find_321_bruteforce(w, radius) is None


def condition_ii_bruteforce(w: AffinePermutation, radius: int = DEFAULT_ORACLE_RADIUS) -> bool:
    """Condition (ii) checked on every pair of positions in the oracle window."""
    positions = list(_oracle_positions(w.n, radius))
    values = [w(t) for t in positions]
    for j, b in enumerate(positions):
        for i in range(j):
            if values[i] > values[j] and (values[i] <= positions[i] or values[j] >= b):
                return False
    return True


def residues_distinct(n: int, triple: Triple) -> bool:
    return len({residue(t, n) for t in triple}) == 3


class PatternResource:
    """
    Window-level predicates bound to an AffineGroup.

    The brute-force oracles use the group's window radius.
    """

    def __init__(self, group):
        """
        Initialize pattern resource.

        Args:
            group: AffineGroup instance
        """
        self.group = group

    def is_321_avoiding(self, w: AffinePermutation) -> bool:
        self.group.check_rank(w)
        return is_321_avoiding(w)

    def find_321_instance(self, w: AffinePermutation) -> Optional[Triple]:
        self.group.check_rank(w)
        return find_321_instance(w)

    def normalize_triple(self, w: AffinePermutation, a: int, b: int, c: int) -> Triple:
        self.group.check_rank(w)
        return normalize_triple(w, a, b, c)

    def condition_ii_holds(self, w: AffinePermutation) -> bool:
        self.group.check_rank(w)
        return condition_ii_holds(w)

    def find_321_bruteforce(self, w: AffinePermutation) -> Optional[Triple]:
        self.group.check_rank(w)
        return find_321_bruteforce(w, radius=self.group.window_radius)

    def condition_ii_bruteforce(self, w: AffinePermutation) -> bool:
        self.group.check_rank(w)
        return condition_ii_bruteforce(w, radius=self.group.window_radius)
