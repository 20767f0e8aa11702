"""
Root Resource

Root system of type Ã_{n-1} in simple-root coordinates: the reflection
action of generators and of ρ, inversion sets, and the root criterion for
full commutativity.

Orientation: for w = s_{i_1} ... s_{i_r}, w(α) applies s_{i_r} first. The
inversion set is N(w) = {α > 0 : w(α) < 0}.
"""

from operator import add
from typing import FrozenSet, List, Sequence

from ..models import AffinePermutation, CoxeterWord, Root
from ..permutation import canonical_reduced_word, require_index, require_rank, require_same_rank


def simple_root(n: int, i: int) -> Root:
    """α_i."""
    require_index(n, i)
    return Root.model_construct(n=n, coeffs=tuple(1 if j == i else 0 for j in range(1, n + 1)))


def delta(n: int) -> Root:
    """The imaginary root α_1 + ... + α_n."""
    require_rank(n)
    return Root.model_construct(n=n, coeffs=(1,) * n)


def _pair_with_simple(coeffs: Sequence[int], i: int) -> int:
    # column i of the affine Cartan matrix: 2 on the diagonal, -1 at both cyclic neighbours
    n = len(coeffs)
    return 2 * coeffs[i - 1] - coeffs[i - 2] - coeffs[i % n]


def pairing(r1: Root, r2: Root) -> int:
    """Symmetric bilinear form with (α_i, α_i) = 2, (α_i, α_j) = -1 for adjacent i, j, else 0."""
    require_same_rank(r1.n, r2.n)
    return sum(c * _pair_with_simple(r1.coeffs, j) for j, c in enumerate(r2.coeffs, start=1))


def norm2(r: Root) -> int:
    return pairing(r, r)


def height(r: Root) -> int:
    return sum(r.coeffs)


def is_real_root(r: Root) -> bool:
    """Real roots are the sign-definite lattice vectors of norm 2."""
    return (r.is_positive or r.is_negative) and norm2(r) == 2


def roots_sum_is_root(a: Root, b: Root) -> bool:
    """For real roots a, b: a + b is a real root iff (a, b) = -1."""
    return pairing(a, b) == -1


def simple_reflection_action(i: int, r: Root) -> Root:
    """s_i(r) = r - (r, α_i) α_i."""
    require_index(r.n, i)
    coeffs = list(r.coeffs)
    coeffs[i - 1] -= _pair_with_simple(r.coeffs, i)
    return Root.model_construct(n=r.n, coeffs=tuple(coeffs))


def act(word: CoxeterWord, r: Root) -> Root:
    """w(r) for w = s_{i_1} ... s_{i_r}, applying the last letter first."""
    require_same_rank(word.n, r.n)
    for letter in reversed(word.letters):
        r = simple_reflection_action(letter, r)
    return r


def act_on_root(w: AffinePermutation, r: Root) -> Root:
    return act(canonical_reduced_word(w), r)


def rho_action(r: Root, times: int = 1) -> Root:
    """ρ^times(r), where ρ(α_i) = α_{i+1} with indices modulo n."""
    shift = times % r.n
    if shift == 0:
        return r
    return Root.model_construct(n=r.n, coeffs=r.coeffs[-shift:] + r.coeffs[:-shift])


def inversion_set(w: AffinePermutation) -> FrozenSet[Root]:
    """
    N(w) = {α > 0 : w(α) < 0}.

    With j_1 ... j_r the canonical reduced word of w read backwards (a reduced
    word of w⁻¹), N(w) = {α_{j_1}, s_{j_1}(α_{j_2}), s_{j_1}s_{j_2}(α_{j_3}), ...}.
    The prefix product is kept as the images of the simple roots and updated
    one reflection at a time.
    """
    n = w.n
    # images[i]: coefficients of s_{j_1}...s_{j_{k-1}}(α_{i+1})
    images = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]
    roots = set()
    for letter in reversed(canonical_reduced_word(w).letters):
        j = letter - 1
        column = images[j]
        roots.add(column)
        for i in ((j - 1) % n, (j + 1) % n):
            images[i] = tuple(map(add, images[i], column))
        images[j] = tuple(-c for c in column)
    return frozenset(Root.model_construct(n=n, coeffs=c) for c in roots)


def condition_iv_holds(w: AffinePermutation) -> bool:
    """
    No positive roots α, β, α + β with w(α) < 0 and w(β) < 0.

    When α, β are inverted and α + β is a root, α + β is inverted too, and for
    real roots α + β is a root iff (α, β) = -1. So the criterion fails exactly
    when two members of N(w) sum to a third.
    """
    inverted = sorted((r.coeffs for r in inversion_set(w)), key=lambda c: (sum(c), c))
    members = set(inverted)
    heights = [sum(c) for c in inverted]
    tallest = heights[-1] if heights else 0
    for idx, a in enumerate(inverted):
        for jdx in range(idx + 1, len(inverted)):
            if heights[idx] + heights[jdx] > tallest:
                break
            if tuple(map(add, a, inverted[jdx])) in members:
                return False
    return True


def positive_real_roots(n: int, max_height: int) -> List[Root]:
    """
    Positive real roots of height at most ``max_height``, sorted by (height, coefficients).

    These are β + mδ (m >= 0) and mδ - β (m >= 1) for β a positive root of the
    finite system spanned by α_1..α_{n-1}.
    """
    require_rank(n)
    finite = [
        tuple(1 if i <= t < j else 0 for t in range(1, n + 1))
        for i in range(1, n)
        for j in range(i + 1, n + 1)
    ]
    roots = []
    m = 0
    while m * n - (n - 1) <= max_height:
        for beta in finite:
            plus = tuple(c + m for c in beta)
            if sum(plus) <= max_height:
                roots.append(plus)
            if m >= 1:
                minus = tuple(m - c for c in beta)
                if sum(minus) <= max_height:
                    roots.append(minus)
        m += 1
    return [Root.model_construct(n=n, coeffs=c) for c in sorted(roots, key=lambda c: (sum(c), c))]


class RootResource:
    """Root-system operations bound to an AffineGroup."""

    def __init__(self, group):
        """
        Initialize root resource.

        Args:
            group: AffineGroup instance
        """
        self.group = group

    def simple_root(self, i: int) -> Root:
        return simple_root(self.group.n, i)

    def delta(self) -> Root:
        return delta(self.group.n)

    def act(self, w: AffinePermutation, r: Root) -> Root:
        self.group.check_rank(w)
        self.group.check_rank(r)
        return act_on_root(w, r)

    def inversion_set(self, w: AffinePermutation) -> FrozenSet[Root]:
        self.group.check_rank(w)
        return inversion_set(w)

    def condition_iv_holds(self, w: AffinePermutation) -> bool:
        self.group.check_rank(w)
        return condition_iv_holds(w)

    def positive_real_roots(self, max_height: int) -> List[Root]:
        return positive_real_roots(self.group.n, max_height)
