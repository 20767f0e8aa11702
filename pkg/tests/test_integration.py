"""
Integration tests for affine-fc.

Exhaustive verification runs over the balls of radius 8 in ranks 3, 4 and 5.
They take a while.

Run with: pytest -m integration
Skip with: pytest -m "not integration"
"""

import json

import pytest

from affine_fc import AffineGroup
from affine_fc.cli import EXIT_OK, main
from affine_fc.models import CheckName, CheckStatus
from affine_fc.resources.verification import CHECK_ORDER


@pytest.mark.integration
@pytest.mark.slow
class TestExhaustiveVerification:
    """Test every check over the radius-8 balls."""

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_all_checks(self, n):
        """Test all checks pass with no failures."""
        with AffineGroup(n) as group:
            summary = group.verification.run(8)

        assert [c.name for c in summary.checks] == list(CHECK_ORDER)
        for check in summary.checks:
            assert check.failures == 0, (check.name, check.failure_samples)
            assert check.status in (CheckStatus.PASSED, CheckStatus.SKIPPED)
        assert summary.exit_code == 0
        assert len(summary.counts_by_length) == 9

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_every_fc_element_has_one_cell(self, n):
        """Test fully commutative elements land in exactly one representative cell."""
        group = AffineGroup(n)
        shapes = {shape for _, shape in group.cells.representatives()}

        for w in group.ball(8).elements():
            if group.words.is_fully_commutative(w):
                assert group.cells.sigma(w) in shapes
                assert group.cells.cell_of(w) is not None

    def test_rank_three_fc_counts(self):
        """Test rank 3 has six fully commutative elements at each length from 2."""
        summary = AffineGroup(3).verification.run(8, [CheckName.THM27])

        assert summary.fc_counts_by_length == [1, 3] + [6] * 7


@pytest.mark.integration
@pytest.mark.slow
class TestCommandLineWorkflow:
    """Test the command line end to end."""

    def test_verify_rank_four(self, capsys):
        """Test verify over the rank-4 ball of radius 6 as JSON."""
        code = main(["verify", "--n", "4", "--L", "6", "--format", "jsonl"])
        summary = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert all(c["failures"] == 0 for c in summary["checks"])
        assert len(summary["counts_by_length"]) == 7

    def test_enumerate_matches_verify_counts(self, capsys):
        """Test enumerate and verify agree on per-length counts."""
        main(["enumerate", "--n", "4", "--L", "5", "--format", "jsonl"])
        records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        summary = AffineGroup(4).verification.run(5, [CheckName.THM27])

        for ell, (count, fc) in enumerate(
            zip(summary.counts_by_length, summary.fc_counts_by_length)
        ):
            layer = [r for r in records if r["length"] == ell]
            assert len(layer) == count
            assert sum(r["fc"] for r in layer) == fc
