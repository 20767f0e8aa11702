"""
Word Resource

Coxeter words: evaluation, reducedness, commutation classes and the
word-based test for full commutativity.
"""

import logging
from collections import deque
from typing import Deque, Dict, List, Optional, Set, Tuple

from ..exceptions import ClassSizeExceededError, PreconditionError
from ..models import AffinePermutation, CoxeterWord
from ..permutation import (
    has_descent_at,
    right_swap,
    canonical_reduced_word,
    identity,
    length,
    require_index,
    residue,
    right_multiply,
)

logger = logging.getLogger(__name__)

DEFAULT_CLASS_CAP = 1_000_000

Letters = Tuple[int, ...]


def are_adjacent(n: int, i: int, j: int) -> bool:
    """True iff s_i and s_j are joined in the Coxeter graph (braid order 3)."""
    return i != j and (i - j) % n in (1, n - 1)


def commutes(n: int, i: int, j: int) -> bool:
    """True iff s_i s_j = s_j s_i is a commutation move (distinct, non-adjacent)."""
    return i != j and not are_adjacent(n, i, j)


def neighbors(n: int, i: int) -> Tuple[int, int]:
    """The two generators that do not commute with s_i."""
    require_index(n, i)
    return residue(i - 1, n), residue(i + 1, n)


def contains_braid_factor(n: int, letters: Letters) -> Optional[int]:
    """Start index of the first factor i, j, i with i, j adjacent, or None."""
    for p in range(len(letters) - 2):
        if letters[p] == letters[p + 2] and are_adjacent(n, letters[p], letters[p + 1]):
            return p
    return None


def evaluate_word(word: CoxeterWord) -> AffinePermutation:
    """The product s_{i_1} s_{i_2} ... s_{i_r}."""
    w = identity(word.n)
    for letter in word.letters:
        w = right_multiply(w, letter)
    return w


def is_reduced(word: CoxeterWord) -> bool:
    return length(evaluate_word(word)) == len(word.letters)


def commutation_class(word: CoxeterWord, cap: int = DEFAULT_CLASS_CAP) -> List[CoxeterWord]:
    """
    All words reachable from a reduced word by swapping adjacent commuting letters.

    Args:
        word: Reduced word
        cap: Maximum class size

    Returns:
        The class, sorted by letters

    Raises:
        PreconditionError: If the word is not reduced
        ClassSizeExceededError: If the class grows beyond ``cap``
    """
    if not is_reduced(word):
        raise PreconditionError(
            f"commutation classes need a reduced word, got {word}", operation="commutation_class"
        )
    n = word.n
    seen: Set[Letters] = {word.letters}
    queue: Deque[Letters] = deque([word.letters])
    while queue:
        letters = queue.popleft()
        for p in range(len(letters) - 1):
            if commutes(n, letters[p], letters[p + 1]):
                swapped = letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2 :]
                if swapped not in seen:
                    seen.add(swapped)
                    if len(seen) > cap:
                        raise ClassSizeExceededError(
                            f"commutation class of {word} exceeds cap {cap}",
                            limit=cap,
                            reached=len(seen),
                        )
                    queue.append(swapped)
    logger.debug("commutation class of %s has %d words", word, len(seen))
    return [CoxeterWord.model_construct(n=n, letters=letters) for letters in sorted(seen)]


def is_fully_commutative_word(w: AffinePermutation, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """
    Full commutativity through words: no member of the commutation class of the
    canonical reduced word contains a factor i, j, i with i, j adjacent.

    A class without braid factors is closed under braid moves and therefore
    holds every reduced word of w.
    """
    for member in commutation_class(canonical_reduced_word(w), cap=cap):
        if contains_braid_factor(w.n, member.letters) is not None:
            return False
    return True


def check_lemma_2_6(word: CoxeterWord, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """
    Between two consecutive occurrences of a generator s, both non-commuting
    neighbours of s occur.

    Raises:
        PreconditionError: If the word is not reduced or its element is not fully commutative
    """
    if not is_reduced(word):
        raise PreconditionError(f"{word} is not reduced", operation="check_lemma_2_6")
    if not is_fully_commutative_word(evaluate_word(word), cap=cap):
        raise PreconditionError(
            f"{word} does not represent a fully commutative element", operation="check_lemma_2_6"
        )
    n = word.n
    last_seen: Dict[int, int] = {}
    for position, letter in enumerate(word.letters):
        if letter in last_seen:
            between = set(word.letters[last_seen[letter] + 1 : position])
            if not set(neighbors(n, letter)) <= between:
                return False
        last_seen[letter] = position
    return True


def reduced_words(w: AffinePermutation, cap: int = DEFAULT_CLASS_CAP) -> List[CoxeterWord]:
    """
    Every reduced word of w, sorted.

    Raises:
        ClassSizeExceededError: If there are more than ``cap`` reduced words
    """
    memo: Dict[Tuple[int, ...], List[Letters]] = {}

    def words_of(window: Tuple[int, ...]) -> List[Letters]:
        if window in memo:
            return memo[window]
        descents = [i for i in range(1, w.n + 1) if has_descent_at(window, i)]
        if not descents:
            result: List[Letters] = [()]
        else:
            result = []
            for i in descents:
                result.extend(prefix + (i,) for prefix in words_of(right_swap(window, i)))
                if len(result) > cap:
                    raise ClassSizeExceededError(
                        f"{w} has more than {cap} reduced words", limit=cap, reached=len(result)
                    )
        memo[window] = result
        return result

    return [CoxeterWord.model_construct(n=w.n, letters=letters) for letters in sorted(words_of(w.window))]


class WordResource:
    """
    Word-level operations bound to an AffineGroup.

    Provides evaluation, reducedness, commutation classes and the word-based
    full-commutativity predicate, using the group's class-size cap.
    """

    def __init__(self, group):
        """
        Initialize word resource.

        Args:
            group: AffineGroup instance
        """
        self.group = group

    def evaluate(self, word: CoxeterWord) -> AffinePermutation:
        self.group.check_rank(word)
        return evaluate_word(word)

    def is_reduced(self, word: CoxeterWord) -> bool:
        self.group.check_rank(word)
        return is_reduced(word)

    def commutation_class(self, word: CoxeterWord) -> List[CoxeterWord]:
        self.group.check_rank(word)
        return commutation_class(word, cap=self.group.class_cap)

    def is_fully_commutative(self, w: AffinePermutation) -> bool:
        self.group.check_rank(w)
        return is_fully_commutative_word(w, cap=self.group.class_cap)

    def check_lemma_2_6(self, word: CoxeterWord) -> bool:
        self.group.check_rank(word)
        return check_lemma_2_6(word, cap=self.group.class_cap)

    def reduced_words(self, w: AffinePermutation) -> List[CoxeterWord]:
        self.group.check_rank(w)
        return reduced_words(w, cap=self.group.class_cap)
