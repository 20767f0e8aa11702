"""
Cell Resource

Shi's partition σ(w), the dominance order, and the two-sided cell
classification it induces on W(Ã_{n-1}).

d_k(w) is the largest union of k decreasing chains of integers with pairwise
distinct residues modulo n. Each chain can be translated by multiples of n on
its own, so only the residues matter: r ≺ s when some positions p ≡ r and
q ≡ s have p < q and w(p) > w(q). This is a strict partial order on 1..n and
d_k is the largest union of k chains in it, i.e. the largest set of residues
with no antichain of size k + 1.
"""

import logging
from bisect import bisect_left
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from ..exceptions import ConsistencyError, PreconditionError
from ..models import AffinePermutation, CoxeterWord, Partition
from ..permutation import require_rank, require_same_rank
from .words import evaluate_word

logger = logging.getLogger(__name__)


def residue_order(w: AffinePermutation) -> List[Tuple[int, int]]:
    """
    The pairs r ≺ s of the residue order of w, sorted.

    Placing p at r, the smallest q > r with q ≡ s is s or s + n, and it has the
    smallest value w(q) among those candidates.
    """
    n = w.n
    relation = []
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            if s != r and w(s if s > r else s + n) < w(r):
                relation.append((r, s))
    return relation


@lru_cache(maxsize=65536)
def _chain_union_sizes(n: int, window: Tuple[int, ...]) -> Tuple[int, ...]:
    w = AffinePermutation.trusted(n, window)
    comparable = [0] * n
    for r, s in residue_order(w):
        comparable[r - 1] |= 1 << (s - 1)
        comparable[s - 1] |= 1 << (r - 1)

    # width[mask]: largest antichain inside mask
    width = [0] * (1 << n)
    largest = [0] * (n + 1)
    for mask in range(1, 1 << n):
        v = mask.bit_length() - 1
        rest = mask & ~(1 << v)
        width[mask] = max(width[rest], 1 + width[rest & ~comparable[v]])
        size = bin(mask).count("1")
        if size > largest[width[mask]]:
            largest[width[mask]] = size

    sizes = []
    best = 0
    for k in range(1, n + 1):
        best = max(best, largest[k])
        sizes.append(best)
    return tuple(sizes)


def d_k(w: AffinePermutation, k: int) -> int:
    """
    Largest union of k decreasing chains with pairwise non-congruent elements.

    Raises:
        PreconditionError: If k < 1
    """
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}", operation="d_k")
    sizes = _chain_union_sizes(w.n, w.window)
    return sizes[min(k, w.n) - 1]


def sigma(w: AffinePermutation) -> Partition:
    """
    Shi's partition (d_1, d_2 - d_1, ..., d_t - d_{t-1}) with d_t = n.

    Raises:
        ConsistencyError: If the differences are not weakly decreasing
    """
    parts: List[int] = []
    previous = 0
    for size in _chain_union_sizes(w.n, w.window):
        parts.append(size - previous)
        previous = size
        if size == w.n:
            break
    if any(a < b for a, b in zip(parts, parts[1:])) or parts[-1] < 1:
        raise ConsistencyError(f"chain sizes of {w} do not give a partition: {parts}")
    return Partition.model_construct(parts=tuple(parts))


# Window search over explicit representatives


def greene_kleitman_chains(values: Sequence[int], k: int) -> int:
    """
    Largest union of k decreasing subsequences of distinct integers.

    Equals the sum of the first k column lengths of the RSK insertion shape.
    """
    rows: List[List[int]] = []
    for x in values:
        for row in rows:
            idx = bisect_left(row, x)
            if idx == len(row):
                row.append(x)
                break
            row[idx], x = x, row[idx]
        else:
            rows.append([x])
    return sum(min(len(row), k) for row in rows)


def d_k_window(w: AffinePermutation, k: int, radius_multiplier: int = 1) -> int:
    """
    d_k by explicit search: one representative per residue from the ground window.

    Each chain, translated so its minimum lies in 1..n, stays below
    n + n(M + 2n) where M is the spread of the window; ``radius_multiplier``
    scales that bound. Every residue gets a representative, since extra points
    never shrink a union of chains. Translating the whole choice by a multiple
    of n changes nothing, so residue 1 sits at position 1 and the others range
    over offsets of at most that bound on either side.

    Raises:
        PreconditionError: If k < 1
    """
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}", operation="d_k_window")
    n = w.n
    reach = radius_multiplier * (max(w.window) - min(w.window) + 2 * n)
    offsets = [0] + [q for step in range(1, reach + 1) for q in (-step, step)]
    candidates = [[1]] + [[r + q * n for q in offsets] for r in range(2, n + 1)]
    chosen: List[int] = []
    best = 0

    def search(r: int) -> None:
        nonlocal best
        current = greene_kleitman_chains([w(p) for p in sorted(chosen)], k)
        remaining = n - r + 1
        if current + remaining <= best:
            return
        if remaining == 0:
            best = current
            return
        for position in candidates[r - 1]:
            chosen.append(position)
            search(r + 1)
            chosen.pop()
            if best == n:
                return

    search(1)
    return best


# Dominance and cells


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest first part first."""

    def build(total: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, bound), 0, -1):
            for rest in build(total - first, first):
                yield (first,) + rest

    for parts in build(n, n):
        yield Partition.model_construct(parts=parts)


def dominates(lam: Partition, mu: Partition) -> bool:
    """λ ⊵ μ: every prefix sum of λ is at least the matching prefix sum of μ."""
    require_same_rank(lam.n, mu.n)
    lam_sum = mu_sum = 0
    for i in range(max(len(lam.parts), len(mu.parts))):
        lam_sum += lam.parts[i] if i < len(lam.parts) else 0
        mu_sum += mu.parts[i] if i < len(mu.parts) else 0
        if lam_sum < mu_sum:
            return False
    return True


def leq_LR(y: AffinePermutation, w: AffinePermutation) -> bool:
    """y ≤_LR w, which holds iff σ(y) ⊵ σ(w)."""
    require_same_rank(y.n, w.n)
    return dominates(sigma(y), sigma(w))


def same_two_sided_cell(y: AffinePermutation, w: AffinePermutation) -> bool:
    require_same_rank(y.n, w.n)
    return sigma(y) == sigma(w)


def is_fc_by_sigma(w: AffinePermutation) -> bool:
    """Fully commutative iff the first part of σ(w) is at most 2."""
    return sigma(w).parts[0] <= 2


def fc_cell_representatives(n: int) -> List[Tuple[AffinePermutation, Partition]]:
    """s_2 s_4 ... s_{2k} for 0 <= k <= n/2, paired with their σ."""
    require_rank(n)
    representatives = []
    for k in range(n // 2 + 1):
        rep = evaluate_word(CoxeterWord.model_construct(n=n, letters=tuple(range(2, 2 * k + 1, 2))))
        representatives.append((rep, sigma(rep)))
    return representatives


def fc_cell_count(n: int) -> int:
    """Number of two-sided cells made of fully commutative elements."""
    require_rank(n)
    return n // 2 + 1


def cell_of(w: AffinePermutation) -> Optional[int]:
    """k such that w shares a cell with s_2 s_4 ... s_{2k}, or None if w is not fully commutative."""
    parts = sigma(w).parts
    if parts[0] > 2:
        return None
    return parts.count(2)


class CellResource:
    """Cell classification bound to an AffineGroup."""

    def __init__(self, group):
        """
        Initialize cell resource.

        Args:
            group: AffineGroup instance
        """
        self.group = group

    def d_k(self, w: AffinePermutation, k: int) -> int:
        self.group.check_rank(w)
        return d_k(w, k)

    def sigma(self, w: AffinePermutation) -> Partition:
        self.group.check_rank(w)
        return sigma(w)

    def leq_LR(self, y: AffinePermutation, w: AffinePermutation) -> bool:
        self.group.check_rank(y)
        self.group.check_rank(w)
        return leq_LR(y, w)

    def same_two_sided_cell(self, y: AffinePermutation, w: AffinePermutation) -> bool:
        self.group.check_rank(y)
        self.group.check_rank(w)
        return same_two_sided_cell(y, w)

    def is_fully_commutative(self, w: AffinePermutation) -> bool:
        self.group.check_rank(w)
        return is_fc_by_sigma(w)

    def representatives(self) -> List[Tuple[AffinePermutation, Partition]]:
        return fc_cell_representatives(self.group.n)

    def count(self) -> int:
        return fc_cell_count(self.group.n)

    def cell_of(self, w: AffinePermutation) -> Optional[int]:
        self.group.check_rank(w)
        return cell_of(w)
