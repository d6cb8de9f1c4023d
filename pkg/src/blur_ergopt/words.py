"""Words over a countable alphabet of non-negative integer symbols.

A word is an immutable tuple of ints; the empty tuple is the empty word.
"""

from __future__ import annotations

from typing import Iterable, Tuple

Word = Tuple[int, ...]

EPSILON: Word = ()


def word(*symbols: int) -> Word:
    return tuple(int(s) for s in symbols)


def as_word(symbols: Iterable[int]) -> Word:
    w = tuple(int(s) for s in symbols)
    if any(s < 0 for s in w):
        raise ValueError(f"negative symbol in word {w!r}")
    return w


def factors(w: Word) -> set:
    """All factors (subwords) of w, including the empty word."""
    out = {EPSILON}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            out.add(w[i:j])
    return out


def fmt_word(w: Word) -> str:
    if not w:
        return "ε"
    return "(" + ",".join(str(s) for s in w) + ")"
