"""Piecewise-constant weight functions over interval sets."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence, Tuple

from .errors import ValidationError
from .intervals import IntervalSet, RationalLike, intersect, to_rational

Piece = Tuple[Tuple[Fraction, Fraction], Fraction]


class WeightConflict(ValidationError):
    code = "weight-conflict"


class StepWeight:
    """A step function ``t -> value`` whose support is a finite union of closed intervals.

    Pieces are sorted and never overlap on a set of positive measure.  At a
    point shared by two pieces the left one owns the value; this only
    matters for pointwise evaluation, never for an integral.
    """

    __slots__ = ("_pieces",)

    def __init__(self, pieces: Iterable[Tuple[Sequence[RationalLike], RationalLike]] = ()):
        raw = []
        for (b, e), v in pieces:
            raw.append(((to_rational(b), to_rational(e)), _value(v)))
        self._pieces: Tuple[Piece, ...] = _canonical_pieces(raw)

    @classmethod
    def constant(cls, support: IntervalSet, value: RationalLike) -> "StepWeight":
        v = _value(value)
        return cls._trusted(tuple((iv, v) for iv in support.intervals))

    @classmethod
    def _trusted(cls, pieces: Tuple[Piece, ...]) -> "StepWeight":
        obj = cls.__new__(cls)
        obj._pieces = pieces
        return obj

    @property
    def pieces(self) -> Tuple[Piece, ...]:
        return self._pieces

    @property
    def support(self) -> IntervalSet:
        return IntervalSet(iv for iv, _ in self._pieces)

    def values(self) -> Tuple:
        return tuple(v for _, v in self._pieces)

    def breakpoints(self) -> Iterable[Fraction]:
        for (b, e), _ in self._pieces:
            yield b
            yield e

    def value_at(self, t: RationalLike):
        """Value at ``t``, or ``None`` outside the support."""
        t = to_rational(t)
        for (b, e), v in self._pieces:
            if b <= t <= e:
                return v
            if b > t:
                break
        return None

    def integrate(self, over: IntervalSet | None = None):
        """Integral over ``over`` (whole support by default); 0 outside the support."""
        if over is None:
            return sum((v * (e - b) for (b, e), v in self._pieces), Fraction(0))
        total = Fraction(0)
        for (b, e), v in self._pieces:
            total += v * intersect(IntervalSet._trusted(((b, e),)), over).measure
        return total

    def restrict(self, over: IntervalSet) -> "StepWeight":
        out = []
        for iv, v in self._pieces:
            for sub in intersect(IntervalSet._trusted((iv,)), over).intervals:
                out.append((sub, v))
        return StepWeight._trusted(_canonical_pieces(out))

    def combine(self, other: "StepWeight", fn: Callable) -> "StepWeight":
        """Pointwise ``fn(self(t), other(t))`` on the common support."""
        xs, ys = self._pieces, other._pieces
        i = j = 0
        out = []
        while i < len(xs) and j < len(ys):
            (b1, e1), v1 = xs[i]
            (b2, e2), v2 = ys[j]
            lo, hi = max(b1, b2), min(e1, e2)
            if lo <= hi:
                out.append(((lo, hi), fn(v1, v2)))
            if e1 < e2:
                i += 1
            else:
                j += 1
        return StepWeight._trusted(_canonical_pieces(out))

    def __mul__(self, other: "StepWeight") -> "StepWeight":
        return self.combine(other, lambda a, b: a * b)

    def level_set(self, tau: RationalLike) -> IntervalSet:
        """Closed set of times where the weight is at least ``tau``."""
        tau = to_rational(tau)
        return IntervalSet(iv for iv, v in self._pieces if v >= tau)

    def map(self, fn: Callable) -> "StepWeight":
        return StepWeight._trusted(_canonical_pieces([(iv, fn(v)) for iv, v in self._pieces]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StepWeight):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self) -> int:
        return hash(self._pieces)

    def __repr__(self) -> str:
        body = ", ".join(f"[{b}, {e}]: {v}" for (b, e), v in self._pieces)
        return f"StepWeight({body})"


def _value(v):
    if isinstance(v, float):
        return to_rational(v)
    if isinstance(v, (int, str)):
        return to_rational(v)
    return v


def _canonical_pieces(raw: Iterable[Piece]) -> Tuple[Piece, ...]:
    pieces = sorted(raw, key=lambda p: (p[0][0], p[0][1]))
    solid = [p for p in pieces if p[0][0] < p[0][1]]
    points = [p for p in pieces if p[0][0] == p[0][1]]
    for (b, e), _ in pieces:
        if b > e:
            raise ValidationError(f"reversed weight piece [{b}, {e}]")

    merged: list = []
    for (b, e), v in solid:
        if merged:
            (pb, pe), pv = merged[-1]
            if b < pe:
                if v != pv:
                    raise WeightConflict(
                        f"weight pieces overlap on [{b}, {min(e, pe)}] with values {pv} and {v}"
                    )
                merged[-1] = ((pb, max(pe, e)), pv)
                continue
            if b == pe and v == pv:
                merged[-1] = ((pb, e), pv)
                continue
        merged.append(((b, e), v))

    # isolated points survive; points on a solid piece carry no information
    kept_points = []
    for (x, _), v in points:
        if any(b <= x <= e for (b, e), _ in merged):
            continue
        if kept_points and kept_points[-1][0][0] == x:
            continue
        kept_points.append(((x, x), v))
    return tuple(sorted(merged + kept_points, key=lambda p: (p[0][0], p[0][1])))
