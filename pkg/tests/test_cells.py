"""
Tests for Shi's partition and cells (affine_fc.resources.cells).

Tests cover:
- d_k from the residue order
- σ(w) and its golden values
- Dominance order
- Cell comparisons and the fully commutative cells
- The window search cross-check
"""

import pytest

from affine_fc.exceptions import PreconditionError, RankMismatchError
from affine_fc.models import AffinePermutation, Partition
from affine_fc.permutation import enumerate_ball, generator, identity, inverse
from affine_fc.resources.cells import (
    cell_of,
    d_k,
    d_k_window,
    dominates,
    fc_cell_count,
    fc_cell_representatives,
    greene_kleitman_chains,
    is_fc_by_sigma,
    leq_LR,
    partitions,
    residue_order,
    same_two_sided_cell,
    sigma,
)
from affine_fc.resources.words import is_fully_commutative_word


def P(*parts):
    return Partition(parts=parts)


@pytest.mark.unit
@pytest.mark.cells
class TestChainUnions:
    """Test d_k and the residue order."""

    def test_identity(self):
        """Test chains of the identity are singletons."""
        assert d_k(identity(3), 1) == 1
        assert d_k(identity(3), 2) == 2

    def test_longest_element(self, longest3):
        """Test [3,2,1] is one decreasing chain."""
        assert residue_order(longest3) == [(1, 2), (1, 3), (2, 3)]
        assert d_k(longest3, 1) == 3

    def test_generator(self, s1_3):
        """Test s_1: best chain (1,2), then residue 3 alone."""
        assert d_k(s1_3, 1) == 2
        assert d_k(s1_3, 2) == 3
        assert d_k(s1_3, 7) == 3

    def test_k_must_be_positive(self, s1_3):
        """Test k = 0 is rejected."""
        with pytest.raises(PreconditionError):
            d_k(s1_3, 0)

    def test_monotone_and_concave(self, ball4):
        """Test d_k grows with weakly decreasing steps up to n."""
        for w in ball4.elements():
            values = [0] + [d_k(w, k) for k in range(1, 5)]
            steps = [b - a for a, b in zip(values, values[1:])]
            assert values[-1] == 4
            assert all(a >= b for a, b in zip(steps, steps[1:]))

    def test_greene_kleitman(self):
        """Test the RSK column statistic on short sequences."""
        assert greene_kleitman_chains([3, 2, 1], 1) == 3
        assert greene_kleitman_chains([1, 2, 3], 1) == 1
        assert greene_kleitman_chains([2, 1, 3], 1) == 2
        assert greene_kleitman_chains([2, 1, 3], 2) == 3
        assert greene_kleitman_chains([], 2) == 0


@pytest.mark.unit
@pytest.mark.cells
class TestSigma:
    """Test Shi's partition."""

    def test_identity(self):
        """Test σ(e) = (1,1,1,1)."""
        assert sigma(identity(4)) == P(1, 1, 1, 1)

    def test_longest_element(self, longest3):
        """Test σ([3,2,1]) = (3)."""
        assert sigma(longest3) == P(3)

    def test_cell_representative(self, s2s4_5):
        """Test σ(s_2 s_4) = (2,2,1)."""
        assert sigma(s2s4_5) == P(2, 2, 1)

    def test_generators(self):
        """Test σ(s_i) = (2,1,...,1) for every generator."""
        for n in (3, 4, 5):
            for i in range(1, n + 1):
                assert sigma(generator(n, i)) == P(2, *([1] * (n - 2)))

    def test_sum_is_n(self, ball4):
        """Test σ(w) is a partition of n."""
        for w in ball4.elements():
            assert sigma(w).n == 4

    def test_inverse(self, ball3, ball4):
        """Test σ(w) = σ(w⁻¹)."""
        for ball in (ball3, ball4):
            for w in ball.elements():
                assert sigma(w) == sigma(inverse(w))


@pytest.mark.unit
@pytest.mark.cells
class TestDominance:
    """Test the dominance order."""

    @pytest.mark.parametrize(
        "lam,mu,expected",
        [
            ((3,), (2, 1), True),
            ((2, 2), (2, 1, 1), True),
            ((2, 1, 1), (2, 2), False),
            ((3, 1, 1, 1), (2, 2, 2), False),
            ((3, 2, 1), (2, 2, 2), True),
            ((3, 3), (4, 1, 1), False),
            ((4, 1, 1), (3, 3), False),
        ],
    )
    def test_examples(self, lam, mu, expected):
        """Test prefix-sum comparisons."""
        assert dominates(P(*lam), P(*mu)) is expected

    def test_rank_mismatch(self):
        """Test partitions of different n."""
        with pytest.raises(RankMismatchError):
            dominates(P(2, 1), P(2, 2))

    def test_partitions(self):
        """Test partition enumeration order and counts."""
        assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_partial_order(self, n):
        """Test reflexivity, antisymmetry and transitivity."""
        parts = list(partitions(n))
        for a in parts:
            assert dominates(a, a)
            for b in parts:
                if dominates(a, b) and dominates(b, a):
                    assert a == b
                for c in parts:
                    if dominates(a, b) and dominates(b, c):
                        assert dominates(a, c)


@pytest.mark.unit
@pytest.mark.cells
class TestCells:
    """Test cell comparisons and the fully commutative cells."""

    def test_leq_LR(self, longest3, s1_3):
        """Test comparisons through σ."""
        assert leq_LR(longest3, s1_3)
        assert leq_LR(s1_3, s1_3)
        assert not leq_LR(identity(3), longest3)

    def test_same_cell(self, s1_3):
        """Test s_1 and s_2 share a cell, e and s_1 do not."""
        assert same_two_sided_cell(s1_3, generator(3, 2))
        assert not same_two_sided_cell(identity(3), s1_3)

    def test_rank_mismatch(self, s1_3):
        """Test elements of different rank."""
        with pytest.raises(RankMismatchError):
            leq_LR(s1_3, generator(4, 1))

    @pytest.mark.parametrize(
        "window,expected", [([3, 2, 1], False), ([2, 3, 1], True), ([1, 2, 3], True)]
    )
    def test_is_fc_by_sigma(self, window, expected):
        """Test golden examples in rank 3."""
        assert is_fc_by_sigma(AffinePermutation.from_window(window)) is expected

    def test_agrees_with_words(self, ball3, ball4):
        """Test σ(w)_1 <= 2 exactly for fully commutative w."""
        for ball in (ball3, ball4):
            for w in ball.elements():
                assert is_fc_by_sigma(w) == is_fully_commutative_word(w)

    def test_representatives_rank_five(self):
        """Test e, s_2, s_2 s_4 and their partitions."""
        reps = fc_cell_representatives(5)

        assert [shape for _, shape in reps] == [P(1, 1, 1, 1, 1), P(2, 1, 1, 1), P(2, 2, 1)]
        assert reps[0][0] == identity(5)
        assert reps[1][0] == generator(5, 2)

    def test_representatives_rank_three(self):
        """Test e and s_2 in rank 3."""
        reps = fc_cell_representatives(3)

        assert [w for w, _ in reps] == [identity(3), generator(3, 2)]

    @pytest.mark.parametrize("n", range(3, 11))
    def test_cell_count(self, n):
        """Test ⌊n/2⌋ + 1 cells of fully commutative elements."""
        assert fc_cell_count(n) == n // 2 + 1
        reps = fc_cell_representatives(n)
        assert len(reps) == fc_cell_count(n)
        assert len({shape for _, shape in reps}) == len(reps)
        for k, (_, shape) in enumerate(reps):
            assert shape.parts == (2,) * k + (1,) * (n - 2 * k)

    def test_cell_of(self, s2s4_5, longest3):
        """Test the representative index of fully commutative elements."""
        assert cell_of(s2s4_5) == 2
        assert cell_of(identity(5)) == 0
        assert cell_of(longest3) is None

    def test_fc_cells_are_closed_downward(self, ball4):
        """Test partitions dominated by a fully commutative σ are fully commutative."""
        shapes = {sigma(w) for w in ball4.elements()}
        for lam in shapes:
            if lam.parts[0] <= 2:
                for mu in shapes:
                    if dominates(lam, mu):
                        assert mu.parts[0] <= 2


@pytest.mark.unit
@pytest.mark.cells
class TestWindowSearch:
    """Test the explicit window search for d_k."""

    @pytest.mark.parametrize(
        "window,k,expected",
        [([1, 2, 3], 1, 1), ([3, 2, 1], 1, 3), ([2, 1, 3], 1, 2), ([2, 1, 3], 2, 3)],
    )
    def test_examples(self, window, k, expected):
        """Test golden values."""
        assert d_k_window(AffinePermutation.from_window(window), k) == expected

    def test_k_must_be_positive(self, s1_3):
        """Test k = 0 is rejected."""
        with pytest.raises(PreconditionError):
            d_k_window(s1_3, 0)

    def test_matches_residue_order(self, ball3):
        """Test both methods agree on the rank-3 ball."""
        for w in ball3.elements():
            for k in (1, 2):
                assert d_k_window(w, k) == d_k(w, k)

    @pytest.mark.slow
    def test_doubling_is_stable(self, ball3):
        """Test doubling the window never changes d_k."""
        for w in ball3.elements():
            assert d_k_window(w, 1, radius_multiplier=2) == d_k_window(w, 1)

    @pytest.mark.slow
    @pytest.mark.timeout(300)
    @pytest.mark.parametrize("n", [3, 4])
    def test_matches_residue_order_to_length_six(self, n):
        """Test both methods agree up to length 6, on the ground window and its double."""
        for w in enumerate_ball(n, 6).elements():
            for k in range(1, n):
                expected = d_k(w, k)
                for multiplier in (1, 2):
                    assert d_k_window(w, k, radius_multiplier=multiplier) == expected, (w, k, multiplier)
