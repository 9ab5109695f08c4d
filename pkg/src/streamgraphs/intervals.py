"""Exact set algebra over finite unions of closed time intervals.

All endpoints are :class:`fractions.Fraction`; no operation here ever
rounds.  An :class:`IntervalSet` is always in canonical form: intervals
sorted, pairwise disjoint and not touching, so two sets are equal exactly
when their ``intervals`` tuples are equal.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple, Union

from .errors import IntervalError

RationalLike = Union[int, str, Fraction, Decimal, float]
Interval = Tuple[Fraction, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Convert ints, ``p/q`` or decimal strings and floats to a Fraction.

    Floats go through their shortest repr so ``4.5`` becomes exactly 9/2
    rather than the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not time values")
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    return Fraction(value)


class IntervalSet:
    """Canonical finite union of closed intervals ``[b, e]`` with ``b <= e``.

    Degenerate point intervals ``[x, x]`` are kept; they have measure 0.
    """

    __slots__ = ("_intervals",)

    def __init__(self, raw: Iterable[Sequence[RationalLike]] = ()):
        self._intervals: Tuple[Interval, ...] = _canonical(
            (to_rational(b), to_rational(e)) for b, e in raw
        )

    @classmethod
    def _trusted(cls, intervals: Tuple[Interval, ...]) -> "IntervalSet":
        obj = cls.__new__(cls)
        obj._intervals = intervals
        return obj

    @classmethod
    def span(cls, begin: RationalLike, end: RationalLike) -> "IntervalSet":
        return cls([(begin, end)])

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return self._intervals

    @property
    def measure(self) -> Fraction:
        return sum((e - b for b, e in self._intervals), Fraction(0))

    @property
    def lower(self) -> Fraction:
        return self._intervals[0][0]

    @property
    def upper(self) -> Fraction:
        return self._intervals[-1][1]

    def endpoints(self) -> Iterator[Fraction]:
        for b, e in self._intervals:
            yield b
            yield e

    def __contains__(self, t: RationalLike) -> bool:
        t = to_rational(t)
        return any(b <= t <= e for b, e in self._intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._intervals)

    def __len__(self) -> int:
        return len(self._intervals)

    def __bool__(self) -> bool:
        return bool(self._intervals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self) -> int:
        return hash(self._intervals)

    def __repr__(self) -> str:
        if not self._intervals:
            return "IntervalSet(∅)"
        body = " ∪ ".join(f"[{b}, {e}]" for b, e in self._intervals)
        return f"IntervalSet({body})"

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return intersect(self, other)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return union(self, other)

    def issubset(self, other: "IntervalSet") -> bool:
        """True when every point of ``self`` lies in ``other``."""
        return intersect(self, other) == self

    def __le__(self, other: "IntervalSet") -> bool:
        return self.issubset(other)


def _canonical(raw: Iterable[Interval]) -> Tuple[Interval, ...]:
    pairs = []
    for b, e in raw:
        if b > e:
            raise IntervalError(f"reversed interval [{b}, {e}]")
        pairs.append((b, e))
    pairs.sort()
    merged: list = []
    for b, e in pairs:
        if merged and b <= merged[-1][1]:
            if e > merged[-1][1]:
                merged[-1] = (merged[-1][0], e)
        else:
            merged.append((b, e))
    return tuple(merged)


EMPTY = IntervalSet()


def normalize(raw: Iterable[Sequence[RationalLike]]) -> IntervalSet:
    """Build the canonical set from arbitrary ``(begin, end)`` pairs.

    Raises :class:`IntervalError` on a pair with ``begin > end``.
    """
    return IntervalSet(raw)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    xs, ys = a.intervals, b.intervals
    i = j = 0
    out = []
    while i < len(xs) and j < len(ys):
        lo = max(xs[i][0], ys[j][0])
        hi = min(xs[i][1], ys[j][1])
        if lo <= hi:
            out.append((lo, hi))
        if xs[i][1] < ys[j][1]:
            i += 1
        else:
            j += 1
    return IntervalSet._trusted(_canonical(out))


def intersect_all(sets: Iterable[IntervalSet]) -> IntervalSet:
    it = iter(sets)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("intersection of no sets is unbounded") from None
    for s in it:
        if not acc:
            break
        acc = intersect(acc, s)
    return acc


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    if not a:
        return b
    if not b:
        return a
    return IntervalSet._trusted(_canonical(a.intervals + b.intervals))


def union_all(sets: Iterable[IntervalSet]) -> IntervalSet:
    pieces: list = []
    for s in sets:
        pieces.extend(s.intervals)
    return IntervalSet._trusted(_canonical(pieces))


def measure(a: IntervalSet) -> Fraction:
    return a.measure


def dilate(a: IntervalSet, radius: RationalLike, clip: Sequence[RationalLike]) -> IntervalSet:
    """Expand every interval by ``radius`` on both sides, then clip.

    ``clip`` is a single interval ``(begin, end)``.
    """
    r = to_rational(radius)
    if r < 0:
        raise ValueError("dilation radius must be non-negative")
    grown = IntervalSet._trusted(_canonical((b - r, e + r) for b, e in a.intervals))
    return intersect(grown, IntervalSet([clip]))
