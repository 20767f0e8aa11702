"""
Verification Resource

Exhaustive checks of the full-commutativity equivalences, cell structure and
extended-group identities over a ball of W(Ã_{n-1}), as run by
``affine-fc verify``.
"""

import logging
import time
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..exceptions import BudgetExceededError
from ..models import (
    AffinePermutation,
    Ball,
    CheckName,
    CheckResult,
    CheckStatus,
    ExtendedAffinePermutation,
    Partition,
    VerifySummary,
)
from ..permutation import (
    generator,
    inverse,
    inversion_count,
    is_left_descent,
    is_right_descent,
    left_multiply,
    length,
    residue,
    right_multiply,
)
from ..utils import format_partition, format_triple, truncate_samples
from .cells import (
    d_k,
    d_k_window,
    dominates,
    fc_cell_count,
    fc_cell_representatives,
    is_fc_by_sigma,
    sigma,
)
from .extended import (
    condition_iv_extended,
    conjugate_by_rho,
    is_321_extended,
    is_321_extended_direct,
    is_fc_extended,
)
from .patterns import (
    condition_ii_bruteforce,
    condition_ii_holds,
    find_321_bruteforce,
    find_321_instance,
    residues_distinct,
)
from .roots import condition_iv_holds, inversion_set
from .words import is_fully_commutative_word

logger = logging.getLogger(__name__)

CHECK_ORDER = (
    CheckName.THM27,
    CheckName.CELLS,
    CheckName.LEMMA25,
    CheckName.LEMMA42,
    CheckName.PROP23,
    CheckName.PROP51,
    CheckName.SIGMA_INVERSE,
    CheckName.DK_WINDOW,
)

# checks that need no ball
BALL_FREE = frozenset({CheckName.PROP51})

# rank -> (length bound, largest radius multiplier) for the window search of d_k
DK_WINDOW_LIMITS: Dict[int, Tuple[int, int]] = {3: (6, 2), 4: (6, 2)}

EXTENDED_SHIFTS = range(-3, 4)

Outcome = Tuple[int, List[str], Optional[str]]


def expand_checks(checks: Optional[Iterable[CheckName]]) -> List[CheckName]:
    """Resolve ``all`` and duplicates into the fixed run order."""
    requested = set(checks or [CheckName.ALL])
    if CheckName.ALL in requested:
        return list(CHECK_ORDER)
    return [name for name in CHECK_ORDER if name in requested]


def expected_cell_partition(n: int, k: int) -> Partition:
    """(2^k, 1^(n-2k))."""
    return Partition.model_construct(parts=(2,) * k + (1,) * (n - 2 * k))


class VerificationResource:
    """
    Verification harness bound to an AffineGroup.

    Every check returns a CheckResult; a ball that exceeds the group's budget
    marks the checks that need it as incomplete rather than failed.
    """

    def __init__(self, group):
        """
        Initialize verification resource.

        Args:
            group: AffineGroup instance
        """
        self.group = group
        self._fc: Dict[Tuple[int, ...], bool] = {}

    def run(self, max_length: int, checks: Optional[Iterable[CheckName]] = None) -> VerifySummary:
        """
        Run checks over the ball of radius ``max_length``.

        Args:
            max_length: Length bound L
            checks: Check names; None or ``all`` runs every check

        Returns:
            VerifySummary with one result per check, in fixed order
        """
        names = expand_checks(checks)
        summary = VerifySummary(
            n=self.group.n,
            max_length=max_length,
            ball_budget=self.group.ball_budget,
            window_radius=self.group.window_radius,
        )

        ball: Optional[Ball] = None
        budget_note: Optional[str] = None
        if any(name not in BALL_FREE for name in names):
            try:
                ball = self.group.ball(max_length)
            except BudgetExceededError as e:
                logger.warning("ball not built: %s", e.message)
                budget_note = e.message

        if ball is not None:
            summary.counts_by_length = ball.counts
            summary.fc_counts_by_length = [
                sum(1 for w in layer if self.is_fc(w)) for layer in ball.layers
            ]

        for name in names:
            if ball is None and name not in BALL_FREE:
                summary.checks.append(
                    CheckResult(name=name, status=CheckStatus.INCOMPLETE, note=budget_note)
                )
                continue
            summary.checks.append(self.run_check(name, ball))
        return summary

    def run_check(self, name: CheckName, ball: Optional[Ball]) -> CheckResult:
        """Run one check and time it."""
        handler: Callable[[Optional[Ball]], Outcome] = {
            CheckName.THM27: self.check_equivalence,
            CheckName.CELLS: self.check_cells,
            CheckName.LEMMA25: self.check_length_change,
            CheckName.LEMMA42: self.check_rho_conjugation,
            CheckName.PROP23: self.check_bounded_scan,
            CheckName.PROP51: self.check_cell_representatives,
            CheckName.SIGMA_INVERSE: self.check_sigma_inverse,
            CheckName.DK_WINDOW: self.check_dk_window,
        }[name]

        logger.info("running check %s (n=%d)", name.value, self.group.n)
        started = time.perf_counter()
        try:
            population, failures, note = handler(ball)
        except BudgetExceededError as e:
            logger.warning("check %s stopped: %s", name.value, e.message)
            return CheckResult(
                name=name,
                status=CheckStatus.INCOMPLETE,
                elapsed=time.perf_counter() - started,
                note=e.message,
            )
        elapsed = time.perf_counter() - started

        if population == 0 and note is not None:
            status = CheckStatus.SKIPPED
        elif failures:
            status = CheckStatus.FAILED
        else:
            status = CheckStatus.PASSED
        logger.info(
            "check %s: %s, %d checked, %d failures in %.3fs",
            name.value,
            status.value,
            population,
            len(failures),
            elapsed,
        )
        return CheckResult(
            name=name,
            status=status,
            population=population,
            failures=len(failures),
            failure_samples=truncate_samples(failures),
            elapsed=elapsed,
            note=note,
        )

    # Shared per-element data

    def is_fc(self, w: AffinePermutation) -> bool:
        """Word-based full commutativity, memoized per window."""
        if w.window not in self._fc:
            self._fc[w.window] = is_fully_commutative_word(w, cap=self.group.class_cap)
        return self._fc[w.window]

    def clear(self) -> None:
        """Forget memoized verdicts."""
        logger.debug("dropping %d memoized verdicts", len(self._fc))
        self._fc.clear()

    def _progress(self, items: Sequence, desc: str):
        return tqdm(items, desc=desc, disable=not self.group.show_progress, leave=False)

    # Checks

    def check_equivalence(self, ball: Ball) -> Outcome:
        """The word, pair, 321 and root criteria agree on every element."""
        elements = list(ball.elements())
        failures = []
        for w in self._progress(elements, "equivalence"):
            verdicts = (
                self.is_fc(w),
                condition_ii_holds(w),
                find_321_instance(w) is None,
                condition_iv_holds(w),
            )
            if len(set(verdicts)) > 1:
                failures.append(
                    f"{w}: words={verdicts[0]} pairs={verdicts[1]} "
                    f"321={verdicts[2]} roots={verdicts[3]}"
                )
        return len(elements), failures, None

    def check_cells(self, ball: Ball) -> Outcome:
        """
        σ(w)_1 <= 2 exactly for fully commutative w, each such σ is the partition
        of exactly one cell representative, and realized partitions below a
        fully commutative one are fully commutative.
        """
        n = self.group.n
        expected = [expected_cell_partition(n, k) for k in range(n // 2 + 1)]
        elements = list(ball.elements())
        failures = []
        realized = set()
        for w in self._progress(elements, "cells"):
            shape = sigma(w)
            realized.add(shape)
            fc = self.is_fc(w)
            if is_fc_by_sigma(w) != fc:
                failures.append(f"{w}: σ={shape} but fully commutative is {fc}")
            if fc and sum(1 for p in expected if p == shape) != 1:
                failures.append(f"{w}: σ={shape} matches no single cell representative")

        for lam in sorted(realized, key=lambda p: p.parts):
            if lam.parts[0] > 2:
                continue
            for mu in realized:
                if dominates(lam, mu) and mu.parts[0] > 2:
                    failures.append(f"{format_partition(lam.parts)} dominates {format_partition(mu.parts)}")
        if fc_cell_count(n) != len(fc_cell_representatives(n)):
            failures.append(f"cell count {fc_cell_count(n)} differs from the representatives")
        return len(elements), failures, None

    def check_length_change(self, ball: Ball) -> Outcome:
        """
        Multiplying by s_i changes the length by one, downward exactly at a
        descent, on either side. Also checks the length against the inversion
        count, the inverse and the ball depth, and that generators swap only
        adjacent positions.
        """
        n = self.group.n
        failures = []
        population = 0
        for depth, w in self._progress(list(ball.with_lengths()), "length change"):
            ell = length(w)
            population += 1
            if ell != depth or ell != inversion_count(w) or ell != length(inverse(w)):
                failures.append(
                    f"{w}: depth {depth}, length {ell}, inversions {inversion_count(w)}, "
                    f"inverse length {length(inverse(w))}"
                )
            for i in range(1, n + 1):
                right = length(right_multiply(w, i)) - ell
                if right != (-1 if is_right_descent(w, i) else 1):
                    failures.append(f"{w}·s_{i}: length changes by {right}")
                left = length(left_multiply(w, i)) - ell
                if left != (-1 if is_left_descent(w, i) else 1):
                    failures.append(f"s_{i}·{w}: length changes by {left}")

        radius = self.group.window_radius
        positions = range(1 - radius * n, radius * n + n + 1)
        for i in range(1, n + 1):
            s = generator(n, i)
            population += 1
            for c in positions:
                for d in positions:
                    if c < d and s(c) >= s(d) and not (c == d - 1 and s(c) == d and s(d) == c):
                        failures.append(f"s_{i} reverses positions {c} < {d}")
        return population, failures, None

    def check_rho_conjugation(self, ball: Ball) -> Outcome:
        """
        ρ s_i ρ⁻¹ = s_{i+1}; on ρ^z · w with |z| <= 3 the body predicates agree
        with the direct scan of the shifted window and with the root criterion.
        """
        n = self.group.n
        failures = []
        population = 0
        for i in range(1, n + 1):
            population += 1
            conjugate = conjugate_by_rho(generator(n, i))
            target = generator(n, residue(i + 1, n))
            if conjugate != target:
                failures.append(f"ρ s_{i} ρ⁻¹ = {conjugate}, expected {target}")

        for w in self._progress(list(ball.elements()), "extended"):
            fc = self.is_fc(w)
            if is_fc_extended(ExtendedAffinePermutation(z=1, body=w), cap=self.group.class_cap) != fc:
                failures.append(f"ρ · {w}: fully commutative verdict differs from {w}")
            for z in EXTENDED_SHIFTS:
                population += 1
                shifted = ExtendedAffinePermutation(z=z, body=w)
                delegated = is_321_extended(shifted)
                direct = is_321_extended_direct(shifted)
                roots = condition_iv_extended(shifted)
                if not delegated == direct == roots == fc:
                    failures.append(
                        f"{shifted}: 321={delegated} direct={direct} roots={roots} words={fc}"
                    )
        return population, failures, None

    def check_bounded_scan(self, ball: Ball) -> Outcome:
        """The bounded 321 and pair scans agree with brute force over a wide window."""
        n = self.group.n
        radius = self.group.window_radius
        elements = list(ball.elements())
        failures = []
        for w in self._progress(elements, "bounded scan"):
            witness = find_321_instance(w)
            oracle = find_321_bruteforce(w, radius)
            if (witness is None) != (oracle is None):
                failures.append(f"{w}: bounded witness {format_triple(witness)}, oracle {format_triple(oracle)}")
            if witness is not None:
                a, b, c = witness
                in_bounds = 1 <= b <= n and 0 < b - a < n and 0 < c - b < n
                if not (in_bounds and w(a) > w(b) > w(c) and residues_distinct(n, witness)):
                    failures.append(f"{w}: bad witness {format_triple(witness)}")
            if condition_ii_holds(w) != condition_ii_bruteforce(w, radius):
                failures.append(f"{w}: pair criterion differs from brute force")
        return len(elements), failures, None

    def check_cell_representatives(self, ball: Optional[Ball] = None) -> Outcome:
        """s_2 s_4 ... s_{2k} has σ = (2^k, 1^(n-2k)), one distinct partition per k."""
        n = self.group.n
        failures = []
        representatives = fc_cell_representatives(n)
        for k, (rep, shape) in enumerate(representatives):
            if shape != expected_cell_partition(n, k):
                failures.append(f"representative {rep} has σ={shape}")
            if not self.is_fc(rep):
                failures.append(f"representative {rep} is not fully commutative")
        if len({shape for _, shape in representatives}) != len(representatives):
            failures.append("representative partitions are not distinct")
        if len(representatives) != fc_cell_count(n):
            failures.append(f"{len(representatives)} representatives, expected {fc_cell_count(n)}")
        return len(representatives), failures, None

    def check_sigma_inverse(self, ball: Ball) -> Outcome:
        """σ(w) = σ(w⁻¹), and the inversion set has ℓ(w) roots."""
        elements = list(ball.elements())
        failures = []
        for w in self._progress(elements, "sigma inverse"):
            if sigma(w) != sigma(inverse(w)):
                failures.append(f"{w}: σ={sigma(w)}, σ(w⁻¹)={sigma(inverse(w))}")
            if len(inversion_set(w)) != length(w):
                failures.append(f"{w}: {len(inversion_set(w))} inverted roots, length {length(w)}")
        return len(elements), failures, None

    def check_dk_window(self, ball: Ball) -> Outcome:
        """d_k from the residue order equals the window search, also on a wider window."""
        n = self.group.n
        if n not in DK_WINDOW_LIMITS:
            return 0, [], f"window search limited to ranks {sorted(DK_WINDOW_LIMITS)}"
        max_length, max_multiplier = DK_WINDOW_LIMITS[n]
        candidates = [w for depth, w in ball.with_lengths() if depth <= max_length]
        failures = []
        for w in self._progress(candidates, "d_k window"):
            for k in range(1, n):
                expected = d_k(w, k)
                for multiplier in range(1, max_multiplier + 1):
                    found = d_k_window(w, k, radius_multiplier=multiplier)
                    if found != expected:
                        failures.append(f"{w}: d_{k}={expected}, window search x{multiplier} gives {found}")
        note = f"elements of length <= {max_length}"
        return len(candidates), failures, note
