"""
Pytest configuration and fixtures for affine-fc tests.

This module provides common fixtures and utilities used across all tests.
"""

import pytest

from affine_fc import AffineGroup, AffinePermutation, CoxeterWord
from affine_fc.permutation import enumerate_ball


# ============================================================================
# Group Fixtures
# ============================================================================

@pytest.fixture
def group3():
    """Provide the group of rank 3 (Ã_2)."""
    return AffineGroup(3)


@pytest.fixture
def group4():
    """Provide the group of rank 4 (Ã_3)."""
    return AffineGroup(4)


@pytest.fixture
def group5():
    """Provide the group of rank 5 (Ã_4)."""
    return AffineGroup(5)


# ============================================================================
# Ball Fixtures
# ============================================================================

@pytest.fixture(scope="session")
def ball3():
    """All elements of Ã_2 of length at most 3 (19 elements)."""
    return enumerate_ball(3, 3)


@pytest.fixture(scope="session")
def ball4():
    """All elements of Ã_3 of length at most 4."""
    return enumerate_ball(4, 4)


@pytest.fixture(scope="session")
def ball5():
    """All elements of Ã_4 of length at most 3."""
    return enumerate_ball(5, 3)


# ============================================================================
# Golden Elements
# ============================================================================

@pytest.fixture
def longest3():
    """[3,2,1] = s_1 s_2 s_1: length 3, not fully commutative."""
    return AffinePermutation.from_window([3, 2, 1])


@pytest.fixture
def fc3():
    """[2,3,1] = s_1 s_2: fully commutative."""
    return AffinePermutation.from_window([2, 3, 1])


@pytest.fixture
def s1_3():
    """s_1 in rank 3."""
    return AffinePermutation.from_window([2, 1, 3])


@pytest.fixture
def s2s4_5():
    """s_2 s_4 in rank 5, representative of the cell (2,2,1)."""
    return AffinePermutation.from_window([1, 3, 2, 5, 4])


# ============================================================================
# Factories
# ============================================================================

@pytest.fixture
def make_word():
    """Provide a factory for CoxeterWord values: make_word(n, 1, 2, 1)."""

    def build(n, *letters):
        return CoxeterWord(n=n, letters=tuple(letters))

    return build
