"""
Extended Resource

The extended group Ŵ generated by W(Ã_{n-1}) and the shift ρ: t ↦ t + 1.
Every element is ρ^z · w for a unique integer z and w in W; it is stored in
that decomposed form and recomputed from the raw window after each product.
"""

import logging
from typing import Optional, Sequence

from ..exceptions import ConsistencyError, InvalidWindowError
from ..models import AffinePermutation, ExtendedAffinePermutation, Root, window_problem
from ..permutation import compose_windows, identity, invert_window, length, require_same_rank
from .patterns import has_321_pattern, is_321_avoiding
from .roots import act_on_root, condition_iv_holds, inversion_set, rho_action
from .words import DEFAULT_CLASS_CAP, is_fully_commutative_word

logger = logging.getLogger(__name__)


def rho(n: int) -> ExtendedAffinePermutation:
    """The shift t ↦ t + 1, window (2, 3, ..., n + 1)."""
    return ExtendedAffinePermutation(z=1, body=identity(n))


def power_of_rho(n: int, z: int) -> ExtendedAffinePermutation:
    return ExtendedAffinePermutation(z=z, body=identity(n))


def embed(w: AffinePermutation) -> ExtendedAffinePermutation:
    return ExtendedAffinePermutation(z=0, body=w)


def from_window_extended(values: Sequence[int], n: Optional[int] = None) -> ExtendedAffinePermutation:
    """
    Decompose a window of Ŵ as ρ^z · w.

    Entries that are pairwise non-congruent modulo n sum to n(n+1)/2 modulo n,
    so z = (Σ - n(n+1)/2) / n is an integer.

    Raises:
        InvalidWindowError: If the rank is too small, the length is wrong or two entries collide
    """
    window = tuple(int(v) for v in values)
    rank = len(window) if n is None else n
    problem = window_problem(rank, window, require_sum=False)
    if problem:
        raise InvalidWindowError(problem[1], invariant=problem[0])
    excess = sum(window) - rank * (rank + 1) // 2
    if excess % rank:
        raise ConsistencyError(f"window {list(window)} has a sum not congruent to n(n+1)/2")
    z = excess // rank
    return ExtendedAffinePermutation(
        z=z, body=AffinePermutation.trusted(rank, tuple(v - z for v in window))
    )


def compose_extended(u: ExtendedAffinePermutation, v: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
    """u·v as t ↦ u(v(t))."""
    require_same_rank(u.n, v.n)
    return from_window_extended(compose_windows(u.window, v.window), n=u.n)


def inverse_extended(w: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
    return from_window_extended(invert_window(w.window), n=w.n)


def length_extended(w: ExtendedAffinePermutation) -> int:
    """ℓ(ρ^z · w) = ℓ(w)."""
    return length(w.body)


def conjugate_by_rho(w: AffinePermutation, times: int = 1) -> AffinePermutation:
    """
    ρ^times · w · ρ^(-times), which lies in W again.

    Raises:
        ConsistencyError: If the conjugate leaves W
    """
    shift = power_of_rho(w.n, times)
    result = compose_extended(compose_extended(shift, embed(w)), inverse_extended(shift))
    if result.z != 0:
        raise ConsistencyError(f"conjugate of {w} by ρ^{times} has ρ-power {result.z}")
    return result.body


def is_fc_extended(w: ExtendedAffinePermutation, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """Fully commutative iff the body is."""
    return is_fully_commutative_word(w.body, cap=cap)


def is_321_extended(w: ExtendedAffinePermutation) -> bool:
    """321-avoiding iff the body is; ρ^z preserves the relative order of values."""
    return is_321_avoiding(w.body)


def is_321_extended_direct(w: ExtendedAffinePermutation) -> bool:
    """Bounded 321 scan applied to the window of ρ^z · w itself."""
    return not has_321_pattern(w.window)


def act_extended(w: ExtendedAffinePermutation, r: Root) -> Root:
    """ρ^z(body(r))."""
    return rho_action(act_on_root(w.body, r), w.z)


def condition_iv_extended(w: ExtendedAffinePermutation) -> bool:
    """
    The inversion-set criterion for ρ^z · w.

    Powers of ρ permute the positive roots, so the inversion set of ρ^z · w is
    that of the body.

    Raises:
        ConsistencyError: If ρ^z sends an inverted root of the body to a non-negative root
    """
    for root in inversion_set(w.body):
        if not act_extended(w, root).is_negative:
            raise ConsistencyError(f"{w} does not send inverted root {root} to a negative root")
    return condition_iv_holds(w.body)


class ExtendedResource:
    """Extended-group operations bound to an AffineGroup."""

    def __init__(self, group):
        """
        Initialize extended resource.

        Args:
            group: AffineGroup instance
        """
        self.group = group

    def rho(self) -> ExtendedAffinePermutation:
        return rho(self.group.n)

    def power_of_rho(self, z: int) -> ExtendedAffinePermutation:
        return power_of_rho(self.group.n, z)

    def embed(self, w: AffinePermutation) -> ExtendedAffinePermutation:
        self.group.check_rank(w)
        return embed(w)

    def from_window(self, values: Sequence[int]) -> ExtendedAffinePermutation:
        return from_window_extended(values, n=self.group.n)

    def compose(self, u: ExtendedAffinePermutation, v: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
        self.group.check_rank(u)
        self.group.check_rank(v)
        return compose_extended(u, v)

    def inverse(self, w: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
        self.group.check_rank(w)
        return inverse_extended(w)

    def length(self, w: ExtendedAffinePermutation) -> int:
        self.group.check_rank(w)
        return length_extended(w)

    def conjugate_by_rho(self, w: AffinePermutation, times: int = 1) -> AffinePermutation:
        self.group.check_rank(w)
        return conjugate_by_rho(w, times)

    def is_fully_commutative(self, w: ExtendedAffinePermutation) -> bool:
        self.group.check_rank(w)
        return is_fc_extended(w, cap=self.group.class_cap)

    def is_321_avoiding(self, w: ExtendedAffinePermutation) -> bool:
        self.group.check_rank(w)
        return is_321_extended(w)

    def condition_iv_holds(self, w: ExtendedAffinePermutation) -> bool:
        self.group.check_rank(w)
        return condition_iv_extended(w)
