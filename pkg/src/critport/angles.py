"""Exact arithmetic on the circle R/Z.

Angles are rationals in [0, 1) and the dynamics is the multiplication map
``m_d: x -> d*x mod 1``.  Arcs are half-open ``(start, end]`` throughout; the
mirrored ``[start, end)`` convention is only used for right-sided queries.
"""

from __future__ import annotations

import math
import re
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's precondition."""


class Angle(Fraction):
    """A rational angle in [0, 1), always stored reduced.

    >>> Angle(13, 36)
    Angle(13, 36)
    >>> Angle(5, 4), Angle(2, 8)
    (Angle(1, 4), Angle(1, 4))
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        try:
            if denominator is None:
                value = Fraction(numerator)
            else:
                value = Fraction(numerator, denominator)
        except ZeroDivisionError:
            raise InvalidInput("zero denominator") from None
        value -= math.floor(value)
        return super().__new__(cls, value.numerator, value.denominator)

    def __reduce__(self):
        return (self.__class__, (self.numerator, self.denominator))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


def angle_new(numerator: int, denominator: int) -> Angle:
    return Angle(numerator, denominator)


_ANGLE_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


def parse_angle(text: str) -> Angle:
    """Parse the exact string form ``"p/q"`` (reduced, ``0 <= p < q``) or ``"0"``."""
    m = _ANGLE_RE.match(text.strip())
    if m is None:
        raise InvalidInput(f"not an angle: {text!r}")
    p = int(m.group(1))
    if m.group(2) is None:
        if p != 0:
            raise InvalidInput(f"angle out of range [0,1): {text!r}")
        return Angle(0)
    q = int(m.group(2))
    if q == 0:
        raise InvalidInput(f"zero denominator: {text!r}")
    if p >= q or math.gcd(p, q) != 1:
        raise InvalidInput(f"angle not reduced in [0,1): {text!r}")
    return Angle(p, q)


def format_angle(a: Fraction) -> str:
    return str(Fraction(a))


def md(a: Fraction, d: int) -> Angle:
    """The multiplication map ``a -> d*a mod 1``."""
    return Angle(d * a)


@dataclass(frozen=True)
class OrbitDecomposition:
    preperiod: tuple[Angle, ...]
    cycle: tuple[Angle, ...]

    @property
    def period(self) -> int:
        return len(self.cycle)

    @property
    def is_periodic(self) -> bool:
        return not self.preperiod

    def angles(self) -> tuple[Angle, ...]:
        return self.preperiod + self.cycle


def orbit(a: Fraction, d: int) -> OrbitDecomposition:
    """Forward orbit of ``a`` under m_d split into preperiod and cycle."""
    seen: dict[Angle, int] = {}
    path: list[Angle] = []
    x = Angle(a)
    while x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = md(x, d)
    start = seen[x]
    return OrbitDecomposition(tuple(path[:start]), tuple(path[start:]))


def orbit_set(angles: Iterable[Fraction], d: int) -> frozenset[Angle]:
    """Union of the forward orbits of ``angles``."""
    out: set[Angle] = set()
    for a in angles:
        x = Angle(a)
        while x not in out:
            out.add(x)
            x = md(x, d)
    return frozenset(out)


def is_periodic(a: Fraction, d: int) -> bool:
    return orbit(a, d).is_periodic


def ccw_distance(a: Fraction, b: Fraction) -> Fraction:
    """Counterclockwise distance from ``a`` to ``b``, in [0, 1)."""
    return (b - a) % 1


def cyclically_ordered(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """True iff going counterclockwise from ``a`` one meets ``b`` before ``c``."""
    if a == b or b == c or a == c:
        raise InvalidInput("cyclically_ordered needs three distinct angles")
    return ccw_distance(a, b) < ccw_distance(a, c)


def gap_index(points: Sequence[Fraction], x: Fraction, right: bool = False) -> int:
    """Index ``i`` of the arc ``(points[i], points[i+1]]`` containing ``x``.

    ``points`` must be sorted ascending in [0, 1); the last arc wraps through 0.
    With ``right=True`` the arcs are ``[points[i], points[i+1])`` instead.
    """
    j = bisect_right(points, x) if right else bisect_left(points, x)
    return (j - 1) % len(points)


def _sorted(angles: Iterable[Fraction]) -> list[Angle]:
    return sorted({Angle(a) for a in angles})


def unlinked(S: Iterable[Fraction], T: Iterable[Fraction]) -> bool:
    """True iff ``T`` lies in the closure of one component of the circle minus ``S``.

    The sets must be disjoint; shared points are a job for
    :func:`weakly_unlinked_right`.
    """
    s, t = _sorted(S), _sorted(T)
    if not s or not t:
        raise InvalidInput("unlinked needs nonempty sets")
    if set(s) & set(t):
        raise InvalidInput("unlinked needs disjoint sets")
    return len({gap_index(s, x) for x in t}) == 1


def weakly_unlinked_right(S: Iterable[Fraction], T: Iterable[Fraction]) -> bool:
    """True iff ``T`` fits in a single arc ``(g1, g2]`` between consecutive points of ``S``."""
    s, t = _sorted(S), _sorted(T)
    if len(s) < 2:
        raise InvalidInput("weakly_unlinked_right needs |S| >= 2")
    if not t:
        raise InvalidInput("weakly_unlinked_right needs nonempty T")
    return len({gap_index(s, x) for x in t}) == 1


def linked_pair(family: Sequence[Iterable[Fraction]]) -> tuple[int, int] | None:
    """Indices of two linked members of a family of disjoint sets, or None.

    One sweep around the circle with a stack: the family is pairwise unlinked
    iff the labels read in cyclic order never interleave as ``a..b..a..b``.
    """
    labelled = []
    for i, s in enumerate(family):
        labelled.extend((Angle(a), i) for a in s)
    labelled.sort()
    if len({a for a, _ in labelled}) != len(labelled):
        raise InvalidInput("family members must be disjoint")
    remaining: dict[int, int] = {}
    for _, i in labelled:
        remaining[i] = remaining.get(i, 0) + 1
    stack: list[int] = []
    open_: set[int] = set()
    for _, i in labelled:
        remaining[i] -= 1
        if i in open_:
            # anything stacked above i is still open, so it interleaves with i
            if stack[-1] != i:
                j = stack[-1]
                return (min(i, j), max(i, j))
            if remaining[i] == 0:
                stack.pop()
                open_.discard(i)
        elif remaining[i] > 0:
            stack.append(i)
            open_.add(i)
    return None


@dataclass(frozen=True)
class Arc:
    """The half-open arc ``(start, end]``, wrapping through 0 when ``end <= start``."""

    start: Angle
    end: Angle

    def __post_init__(self):
        object.__setattr__(self, "start", Angle(self.start))
        object.__setattr__(self, "end", Angle(self.end))
        if self.start == self.end:
            raise InvalidInput("an arc needs distinct endpoints")

    @property
    def length(self) -> Fraction:
        return ccw_distance(self.start, self.end)

    def __contains__(self, x: Fraction) -> bool:
        return 0 < ccw_distance(self.start, x) <= self.length

    def contains_right(self, x: Fraction) -> bool:
        """Membership under the mirrored ``[start, end)`` convention."""
        return ccw_distance(self.start, x) < self.length

    def __str__(self):
        return f"({self.start},{self.end}]"


class ArcSet:
    """A finite union of half-open arcs.

    Stored as sorted disjoint intervals ``(lo, hi]`` with ``0 <= lo < hi <= 1``,
    the point 0 of the circle being represented by 1.  Touching intervals are
    merged, so equal sets have equal representations.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[tuple[Fraction, Fraction]] = ()):
        self.intervals = self._normalize(intervals)

    @staticmethod
    def _normalize(intervals):
        out: list[tuple[Fraction, Fraction]] = []
        for lo, hi in sorted((Fraction(lo), Fraction(hi)) for lo, hi in intervals):
            if not 0 <= lo < hi <= 1:
                raise InvalidInput(f"bad interval ({lo}, {hi}]")
            if out and lo <= out[-1][1]:
                out[-1] = (out[-1][0], max(out[-1][1], hi))
            else:
                out.append((lo, hi))
        return tuple(out)

    @classmethod
    def full(cls) -> ArcSet:
        return cls([(Fraction(0), Fraction(1))])

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc]) -> ArcSet:
        ivs = []
        for arc in arcs:
            lo, hi = Fraction(arc.start), Fraction(arc.end)
            if hi > lo:
                ivs.append((lo, hi))
            else:
                ivs.append((lo, Fraction(1)))
                if hi > 0:
                    ivs.append((Fraction(0), hi))
        return cls(ivs)

    def __eq__(self, other):
        return isinstance(other, ArcSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __bool__(self):
        return bool(self.intervals)

    @property
    def length(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), Fraction(0))

    def __contains__(self, x: Fraction) -> bool:
        x = Fraction(x) % 1 or Fraction(1)
        return any(lo < x <= hi for lo, hi in self.intervals)

    def contains_right(self, x: Fraction) -> bool:
        x = Fraction(x) % 1
        return any(lo <= x < hi for lo, hi in self.intervals)

    def intersection(self, other: ArcSet) -> ArcSet:
        out = []
        for a, b in self.intervals:
            for c, e in other.intervals:
                lo, hi = max(a, c), min(b, e)
                if lo < hi:
                    out.append((lo, hi))
        return ArcSet(out)

    def union(self, other: ArcSet) -> ArcSet:
        return ArcSet(self.intervals + other.intervals)

    def arcs(self) -> list[Arc]:
        """The set as arcs, merging the interval ending at 1 with one starting at 0.

        The full circle has no arc representation and raises.
        """
        ivs = list(self.intervals)
        if ivs == [(0, 1)]:
            raise InvalidInput("the full circle is not an arc")
        if len(ivs) > 1 and ivs[0][0] == 0 and ivs[-1][1] == 1:
            first = ivs.pop(0)
            last = ivs.pop()
            ivs.append((last[0], first[1]))
        return sorted((Arc(lo, hi) for lo, hi in ivs), key=lambda a: a.start)

    def pullback(self, d: int, domain: ArcSet) -> ArcSet:
        """``{x in domain : d*x mod 1 in self}``.

        Exact when m_d is injective on ``domain``; in general it is the full
        preimage intersected with ``domain``.
        """
        out = []
        for lo, hi in domain.intervals:
            a, b = d * lo, d * hi
            for n in range(math.floor(a), math.ceil(b)):
                for c, e in self.intervals:
                    l2, h2 = max(a, c + n), min(b, e + n)
                    if l2 < h2:
                        out.append((l2 / d, h2 / d))
        return ArcSet(out)

    def __repr__(self):
        return f"ArcSet({[(str(lo), str(hi)) for lo, hi in self.intervals]})"

    def __str__(self):
        if not self.intervals:
            return "{}"
        if self.intervals == ((0, 1),):
            return "R/Z"
        return " u ".join(str(a) for a in self.arcs())
