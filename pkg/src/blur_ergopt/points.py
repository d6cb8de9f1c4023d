"""Points of the compactified shift space.

A point is either an eventually periodic symbol sequence (``SequencePoint``)
or a boundary point (``BlurPoint``): a finite stem followed by a blurred set
repeated forever.  The stem-ε boundary point of index r is the fixed point of
the extended shift map; the identification of ``(ε, B_r, B_r, …)`` with
``(B_r, B_r, …)`` is built into the representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple, Union

from .words import Word, fmt_word


@dataclass(frozen=True, order=True)
class SequencePoint:
    """Eventually periodic sequence in canonical form.

    Canonical means the period is primitive and the preperiod is minimal
    (no tail of the preperiod can be rotated into the period).  Use
    :func:`seq_point` to construct.
    """

    preperiod: Word
    period: Word

    @property
    def period_length(self) -> int:
        return len(self.period)

    def coordinate(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> Word:
        return tuple(self.coordinate(i) for i in range(n))

    def first_symbol(self) -> int:
        return self.coordinate(0)

    def shifted(self) -> "SequencePoint":
        if self.preperiod:
            return seq_point(self.preperiod[1:], self.period)
        return seq_point((), self.period[1:] + self.period[:1])

    def is_periodic(self) -> bool:
        return not self.preperiod

    def symbols(self) -> frozenset:
        return frozenset(self.preperiod) | frozenset(self.period)

    def __str__(self) -> str:
        head = ",".join(str(s) for s in self.preperiod)
        per = ",".join(str(s) for s in self.period)
        return (head + " " if head else "") + f"({per})^∞"


def seq_point(preperiod, period) -> SequencePoint:
    """Canonicalise (minimal preperiod, primitive period) and build the point."""
    pre = tuple(int(s) for s in preperiod)
    per = tuple(int(s) for s in period)
    if not per:
        raise ValueError("period must be non-empty")
    for d in range(1, len(per)):
        if len(per) % d == 0 and per == per[:d] * (len(per) // d):
            per = per[:d]
            break
    while pre and pre[-1] == per[-1]:
        per = (per[-1],) + per[:-1]
        pre = pre[:-1]
    return SequencePoint(pre, per)


@dataclass(frozen=True, order=True)
class BlurPoint:
    """Boundary point (w, B_r, B_r, …); ``stem = ε`` is the level-0 fixed point."""

    stem: Word
    r: int

    @property
    def level(self) -> int:
        return len(self.stem)

    def first_symbol(self):
        return self.stem[0] if self.stem else None

    def __str__(self) -> str:
        return f"{fmt_word(self.stem)} | B_{self.r}"


PointHat = Union[SequencePoint, BlurPoint]


def shift_hat(p: PointHat) -> PointHat:
    """The extended left shift: boundary stems shrink toward the fixed point."""
    if isinstance(p, SequencePoint):
        return p.shifted()
    if p.stem:
        return BlurPoint(p.stem[1:], p.r)
    return p


def orbit_of(p: SequencePoint) -> Tuple[SequencePoint, ...]:
    """The forward orbit of a purely periodic point (p distinct shifts)."""
    if p.preperiod:
        raise ValueError("orbit_of expects a purely periodic point")
    out = [p]
    q = p.shifted()
    while q != p:
        out.append(q)
        q = q.shifted()
    return tuple(out)


def point_sort_key(p: PointHat):
    if isinstance(p, SequencePoint):
        return (0, p.preperiod, p.period, 0)
    return (1, p.stem, (), p.r)


def fmt_point(p: PointHat) -> str:
    return str(p)
