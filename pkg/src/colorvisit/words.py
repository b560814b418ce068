"""Color words (finite sequences of color indices) and the order they carry.

A word is a plain tuple of small non-negative ints; the empty tuple is the
root of every tree.  The only order used anywhere in the package is plain
sequence-lexicographic order in which a proper prefix sorts before all of
its extensions.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]

ROOT: Word = ()


class InvalidPriority(ValueError):
    """Priority list is malformed: duplicates or colors outside 0..k-1."""


def word(letters: Iterable[int]) -> Word:
    """Coerce an iterable of letters into a Word."""
    return tuple(int(c) for c in letters)


def is_prefix(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is a (not necessarily proper) prefix of ``b``."""
    return len(a) <= len(b) and tuple(b[: len(a)]) == tuple(a)


def is_proper_prefix(a: Sequence[int], b: Sequence[int]) -> bool:
    return len(a) < len(b) and tuple(b[: len(a)]) == tuple(a)


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Three-way lexicographic comparison: -1, 0 or +1.

    A proper prefix compares less than any of its extensions; otherwise the
    first differing letter decides.
    """
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1


def common_prefix(a: Word, b: Word) -> Word:
    """Longest word that is a prefix of both arguments."""
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return a[:n]


def validate_priority(colors: Iterable[int], k: int) -> Word:
    """Check a priority list against a color count and return it as a tuple.

    The list may be empty and may be a reordered proper subset of 0..k-1;
    duplicates and out-of-range colors are rejected.
    """
    prio = tuple(int(c) for c in colors)
    seen: set[int] = set()
    for c in prio:
        if not 0 <= c < k:
            raise InvalidPriority(f"color {c} outside 0..{k - 1}")
        if c in seen:
            raise InvalidPriority(f"duplicate color {c} in priority list")
        seen.add(c)
    return prio


def rotate(priority: Word) -> Word:
    """Move the lowest-priority color to the top: <d0,d1,...> -> <d1,...,d0>."""
    return priority[1:] + priority[:1]


def full_priority(k: int) -> Word:
    """The default priority list <0, 1, ..., k-1>."""
    return tuple(range(k))


def parse_word(text: str) -> Word:
    """Parse a comma-separated word such as ``"1,0"``; "" is the root."""
    text = text.strip()
    if not text:
        return ROOT
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse word {text!r}: {exc}") from None


def word_str(w: Sequence[int]) -> str:
    """Render a word as ``<1,0>`` (the root renders as ``<>``)."""
    return "<" + ",".join(str(c) for c in w) + ">"
