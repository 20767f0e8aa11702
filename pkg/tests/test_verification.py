"""
Tests for the verification harness (affine_fc.resources.verification).

Tests cover:
- Check selection and ordering
- Results of each check on small balls
- Budget handling
- Failure reporting
"""

import pytest

from affine_fc import AffineGroup
from affine_fc.exceptions import BudgetExceededError
from affine_fc.models import CheckName, CheckStatus
from affine_fc.resources.verification import (
    CHECK_ORDER,
    expand_checks,
    expected_cell_partition,
)


def by_name(summary):
    return {check.name: check for check in summary.checks}


@pytest.mark.unit
@pytest.mark.verification
class TestCheckSelection:
    """Test check name resolution."""

    def test_all(self):
        """Test all expands to the fixed order."""
        assert expand_checks([CheckName.ALL]) == list(CHECK_ORDER)
        assert expand_checks(None) == list(CHECK_ORDER)

    def test_order_and_duplicates(self):
        """Test requested checks run once, in fixed order."""
        requested = [CheckName.PROP51, CheckName.THM27, CheckName.PROP51]

        assert expand_checks(requested) == [CheckName.THM27, CheckName.PROP51]

    def test_expected_partition(self):
        """Test (2^k, 1^(n-2k))."""
        assert expected_cell_partition(5, 2).parts == (2, 2, 1)
        assert expected_cell_partition(4, 0).parts == (1, 1, 1, 1)


@pytest.mark.unit
@pytest.mark.verification
class TestChecks:
    """Test individual checks on small balls."""

    def test_equivalence_rank_three(self, group3):
        """Test the four criteria agree on the 19 elements of length <= 3."""
        summary = group3.verification.run(3, [CheckName.THM27])
        check = summary.checks[0]

        assert check.name == CheckName.THM27
        assert check.status == CheckStatus.PASSED
        assert check.population == 19
        assert check.failures == 0
        assert summary.exit_code == 0

    def test_counts_by_length(self, group3):
        """Test element and fully commutative counts per length."""
        summary = group3.verification.run(3, [CheckName.THM27])

        assert summary.counts_by_length == [1, 3, 6, 9]
        assert summary.fc_counts_by_length == [1, 3, 6, 6]

    def test_zero_length(self, group3):
        """Test every check passes on the identity alone."""
        summary = group3.verification.run(0)

        assert [c.name for c in summary.checks] == list(CHECK_ORDER)
        assert all(c.status == CheckStatus.PASSED for c in summary.checks)
        assert summary.counts_by_length == [1]
        assert summary.passed

    def test_cell_representatives(self, group5):
        """Test the three representatives of rank 5."""
        summary = group5.verification.run(2, [CheckName.PROP51])
        check = summary.checks[0]

        assert check.status == CheckStatus.PASSED
        assert check.population == 3
        assert summary.counts_by_length == []

    def test_cells_rank_four(self, group4):
        """Test the cell check on the rank-4 ball."""
        check = group4.verification.run(4, [CheckName.CELLS]).checks[0]

        assert check.status == CheckStatus.PASSED
        assert check.population == sum(group4.ball(4).counts)

    @pytest.mark.parametrize(
        "name",
        [CheckName.LEMMA25, CheckName.LEMMA42, CheckName.PROP23, CheckName.SIGMA_INVERSE],
    )
    def test_rank_four(self, group4, name):
        """Test the remaining ball checks on rank 4."""
        check = group4.verification.run(3, [name]).checks[0]

        assert check.status == CheckStatus.PASSED, check.failure_samples
        assert check.population > 0

    def test_length_change_population(self, group3):
        """Test ball elements plus one entry per generator."""
        check = group3.verification.run(2, [CheckName.LEMMA25]).checks[0]

        assert check.population == 10 + 3

    def test_rho_conjugation_population(self, group3):
        """Test generators plus seven shifts per element."""
        check = group3.verification.run(1, [CheckName.LEMMA42]).checks[0]

        assert check.population == 3 + 4 * 7

    def test_dk_window_rank_three(self, group3):
        """Test the window search on rank 3."""
        check = group3.verification.run(2, [CheckName.DK_WINDOW]).checks[0]

        assert check.status == CheckStatus.PASSED
        assert check.population == 10
        assert check.note == "elements of length <= 6"

    def test_dk_window_skipped(self, group5):
        """Test the window search is skipped outside its ranks."""
        check = group5.verification.run(1, [CheckName.DK_WINDOW]).checks[0]

        assert check.status == CheckStatus.SKIPPED
        assert check.population == 0
        assert "limited to ranks" in check.note

    def test_fc_memo(self, group3, longest3):
        """Test the memo is keyed by window."""
        assert group3.verification.is_fc(longest3) is False
        assert group3.verification._fc[(3, 2, 1)] is False

    def test_clear(self, group3, longest3):
        """Test clear empties the memo."""
        group3.verification.is_fc(longest3)
        group3.verification.clear()

        assert group3.verification._fc == {}
        assert group3.verification.is_fc(longest3) is False


@pytest.mark.unit
@pytest.mark.verification
class TestBudgetAndFailures:
    """Test incomplete and failed runs."""

    def test_budget_exceeded(self):
        """Test ball checks become incomplete, prop51 still runs."""
        group = AffineGroup(3, ball_budget=5)
        summary = group.verification.run(3)
        checks = by_name(summary)

        assert checks[CheckName.PROP51].status == CheckStatus.PASSED
        for name in CHECK_ORDER:
            if name != CheckName.PROP51:
                assert checks[name].status == CheckStatus.INCOMPLETE
                assert "exceeds budget 5" in checks[name].note
        assert summary.counts_by_length == []
        assert summary.exit_code == 3

    def test_failure_detected(self, group3, mocker):
        """Test a broken criterion fails the equivalence check."""
        mocker.patch(
            "affine_fc.resources.verification.condition_ii_holds", return_value=True
        )

        summary = group3.verification.run(3, [CheckName.THM27])
        check = summary.checks[0]

        assert check.status == CheckStatus.FAILED
        assert check.failures == 3
        assert "pairs=True" in check.failure_samples[0]
        assert summary.exit_code == 1

    def test_failure_beats_incomplete(self, group3, mocker):
        """Test a failed check outranks an incomplete one."""
        mocker.patch(
            "affine_fc.resources.verification.condition_ii_holds", return_value=True
        )
        mocker.patch(
            "affine_fc.resources.verification.conjugate_by_rho",
            side_effect=BudgetExceededError("too large"),
        )

        summary = group3.verification.run(2, [CheckName.THM27, CheckName.LEMMA42])
        checks = by_name(summary)

        assert checks[CheckName.THM27].status == CheckStatus.FAILED
        assert checks[CheckName.LEMMA42].status == CheckStatus.INCOMPLETE
        assert checks[CheckName.LEMMA42].note == "too large"
        assert summary.exit_code == 1

    def test_failure_samples_truncated(self, group4, mocker):
        """Test at most five samples are kept."""
        mocker.patch(
            "affine_fc.resources.verification.condition_iv_holds", return_value=True
        )

        check = group4.verification.run(4, [CheckName.THM27]).checks[0]

        assert check.failures > 5
        assert len(check.failure_samples) == 6
        assert check.failure_samples[-1] == f"... {check.failures - 5} more"


@pytest.mark.slow
@pytest.mark.verification
class TestRankFour:
    """Test the full check list on rank 4."""

    def test_all_checks(self, group4):
        """Test every check passes up to length 4."""
        summary = group4.verification.run(4)

        for check in summary.checks:
            assert check.status == CheckStatus.PASSED, (check.name, check.failure_samples)
        assert summary.exit_code == 0
