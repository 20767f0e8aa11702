"""
affine-fc Utilities

Text formats shared by the library and the command line: windows, words,
root vectors, partitions and witness triples.
"""

import re
from typing import List, Optional, Sequence, Tuple

from .exceptions import InvalidWindowError, InvalidWordError

IDENTITY_WORD = "e"

_WINDOW_RE = re.compile(r"^\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]$")
_WORD_RE = re.compile(r"^\d+(\.\d+)*$")


def parse_window(text: str) -> List[int]:
    """
    Parse a window such as ``[2,1,3]`` or ``[6, 2, -2]``.

    Args:
        text: Comma-separated integers in square brackets

    Returns:
        The integers in order (group invariants are not checked here)

    Raises:
        InvalidWindowError: If the text is not a bracketed integer list
    """
    cleaned = text.strip().replace("−", "-")
    if not _WINDOW_RE.match(cleaned):
        raise InvalidWindowError(f"cannot parse window {text!r}", invariant="syntax")
    body = cleaned[1:-1].strip()
    if not body:
        return []
    return [int(part) for part in body.split(",")]


def parse_word(text: str) -> Tuple[int, ...]:
    """
    Parse a dotted word such as ``1.2.1``; ``e`` or an empty string is the empty word.

    Raises:
        InvalidWordError: If the text is not a dotted list of positive integers
    """
    cleaned = text.strip()
    if cleaned in ("", IDENTITY_WORD, "()"):
        return ()
    if not _WORD_RE.match(cleaned):
        raise InvalidWordError(f"cannot parse word {text!r}", invariant="syntax")
    return tuple(int(part) for part in cleaned.split("."))


def format_window(values: Sequence[int]) -> str:
    """Render a window as ``[2,1,3]``."""
    return "[" + ",".join(str(v) for v in values) + "]"


def format_word(letters: Sequence[int]) -> str:
    """Render a word as ``1.2.1`` (the empty word as ``e``)."""
    if not letters:
        return IDENTITY_WORD
    return ".".join(str(letter) for letter in letters)


def format_vector(coeffs: Sequence[int]) -> str:
    """Render a root as its coefficient vector ``(1,1,0)``."""
    return "(" + ",".join(str(c) for c in coeffs) + ")"


def format_partition(parts: Sequence[int], bare: bool = False) -> str:
    """
    Render a partition.

    Args:
        parts: Parts in weakly decreasing order
        bare: Omit the parentheses (``2,2,1``), as used in TSV/JSONL records

    Returns:
        ``(2,2,1)`` or ``2,2,1``
    """
    body = ",".join(str(p) for p in parts)
    return body if bare else f"({body})"


def format_triple(triple: Optional[Tuple[int, int, int]]) -> Optional[str]:
    """Render a witness triple as ``(a,b,c)``."""
    if triple is None:
        return None
    return "(" + ",".join(str(t) for t in triple) + ")"


def format_extended(z: int, body: Sequence[int]) -> str:
    """Render ρ^z · w as ``ρ^z · [window of w]``."""
    return f"ρ^{z} · {format_window(body)}"


def truncate_samples(samples: List[str], max_items: int = 5) -> List[str]:
    """
    Keep the first ``max_items`` failure samples, noting how many were dropped.

    Args:
        samples: Failure descriptions in discovery order
        max_items: Number of samples to keep

    Returns:
        Truncated list
    """
    if len(samples) <= max_items:
        return samples
    return samples[:max_items] + [f"... {len(samples) - max_items} more"]
