"""Exact planar primitives.

Coordinates are Python rationals: ``int`` when integral, otherwise
:class:`fractions.Fraction` in lowest terms.  Both compare and hash
consistently, so equal points are equal structurally.  No predicate here
ever touches a float.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Sequence, Union

from polyconvex.counting import ACTIVE
from polyconvex.errors import ParseError

Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rational(value) -> Number:
    """Return ``value`` as a canonical exact rational.

    Accepts ints, Fractions, other :class:`numbers.Rational` values and
    strings in the ``"-7/3"`` syntax.  Floats are rejected.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Rational):
        q = Fraction(value.numerator, value.denominator)
        return q.numerator if q.denominator == 1 else q
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Number:
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = m.groups()
    if den is None:
        return int(num)
    if int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return rational(Fraction(int(num), int(den)))


def format_rational(q: Number) -> str:
    return str(q)


class Point(NamedTuple):
    x: Number
    y: Number

    def __add__(self, other):  # type: ignore[override]
        return Point(rational(self.x + other[0]), rational(self.y + other[1]))

    def __sub__(self, other):
        return Point(rational(self.x - other[0]), rational(self.y - other[1]))

    def scale(self, k) -> Point:
        return Point(rational(self.x * k), rational(self.y * k))

    def __str__(self) -> str:
        return f"{self.x} {self.y}"


def as_point(p) -> Point:
    if type(p) is Point:
        return p
    x, y = p
    return Point(rational(x), rational(y))


def midpoint(a: Point, b: Point) -> Point:
    return Point(rational(Fraction(a.x + b.x) / 2), rational(Fraction(a.y + b.y) / 2))


class Segment(NamedTuple):
    """The closed segment conv{a, b}; a singleton when ``a == b``."""

    a: Point
    b: Point

    @property
    def degenerate(self) -> bool:
        return self.a == self.b


class Line:
    """The infinite line through two distinct points."""

    __slots__ = ("p0", "p1")

    def __init__(self, p0, p1):
        p0, p1 = as_point(p0), as_point(p1)
        if p0 == p1:
            raise ValueError("a line needs two distinct points")
        self.p0 = p0
        self.p1 = p1

    def __eq__(self, other):
        return isinstance(other, Line) and (self.p0, self.p1) == (other.p0, other.p1)

    def __hash__(self):
        return hash((self.p0, self.p1))

    def __repr__(self):
        return f"Line({self.p0!r}, {self.p1!r})"

    def reversed(self) -> Line:
        return Line(self.p1, self.p0)


class Hull(NamedTuple):
    dim: int
    extremes: tuple[Point, ...]

    def facets(self) -> list[Segment]:
        """Consecutive extreme pairs; only meaningful when ``dim == 2``."""
        e = self.extremes
        return [Segment(e[k], e[(k + 1) % len(e)]) for k in range(len(e))]


def cross(o, a, b) -> Number:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(a, b, c) -> int:
    """Sign of (b - a) x (c - a): +1 left turn, 0 collinear, -1 right turn."""
    counter = ACTIVE.get()
    if counter is not None:
        counter.orientation_calls += 1
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _between(p, a, b) -> bool:
    # assumes p, a, b collinear
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def point_on_segment(p, s: Segment, half_open: bool = False) -> bool:
    """Membership in the closed segment, or in ``[a, b)`` when ``half_open``.

    ``[a, a)`` is empty.
    """
    a, b = s
    if a == b:
        return not half_open and p == a
    if orientation(a, b, p) != 0 or not _between(p, a, b):
        return False
    return not (half_open and p == b)


def dimension_of_point_set(points: Iterable) -> int:
    it = iter(points)
    first = next(it, None)
    if first is None:
        return -1
    second = None
    for p in it:
        if second is None:
            if p != first:
                second = p
        elif orientation(first, second, p) != 0:
            return 2
    return 0 if second is None else 1


def convex_hull(points: Iterable) -> Hull:
    """Monotone chain hull keeping only extreme points, counterclockwise."""
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        return Hull(-1, ())
    if len(pts) == 1:
        return Hull(0, (pts[0],))

    def chain(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 2:
        return Hull(1, tuple(ring))
    return Hull(2, tuple(ring))


def point_in_hull(hull: Hull, p, strict: bool = False) -> bool:
    """Closed membership in the hull, or membership in its planar interior.

    Hulls of dimension below 2 have empty interior.
    """
    if hull.dim == -1:
        return False
    if hull.dim == 0:
        return not strict and p == hull.extremes[0]
    if hull.dim == 1:
        return not strict and point_on_segment(p, Segment(*hull.extremes))
    e = hull.extremes
    m = len(e)
    if strict:
        return all(orientation(e[k], e[(k + 1) % m], p) > 0 for k in range(m))
    return all(orientation(e[k], e[(k + 1) % m], p) >= 0 for k in range(m))


def segment_line_intersection(s: Segment, line: Line):
    """Exact ``conv{s.a, s.b}`` intersected with ``line``.

    Returns ``None`` when empty, a :class:`Point`, or a :class:`Segment`
    when the segment is non-degenerate and lies on the line.
    """
    a, b = s
    da = cross(line.p0, line.p1, a)
    db = cross(line.p0, line.p1, b)
    oa = (da > 0) - (da < 0)
    ob = (db > 0) - (db < 0)
    if oa == 0 and ob == 0:
        return Segment(a, b) if a != b else a
    if oa * ob > 0:
        return None
    if oa == 0:
        return a
    if ob == 0:
        return b
    t = Fraction(da) / (da - db)
    return Point(rational(a.x + t * (b.x - a.x)), rational(a.y + t * (b.y - a.y)))


def _line_key(a: Point, b: Point) -> tuple:
    # canonical (A, B, C) with A x + B y = C and first nonzero of (A, B) equal to 1
    A = b.y - a.y
    B = a.x - b.x
    C = A * a.x + B * a.y
    lead = A if A != 0 else B
    return (rational(Fraction(A) / lead), rational(Fraction(B) / lead), rational(Fraction(C) / lead))


def _axis(a: Point, b: Point) -> int:
    return 0 if a.x != b.x else 1


def merge_intervals(intervals: Iterable[tuple]) -> list[tuple]:
    """Union of closed intervals as a sorted list of disjoint closed intervals."""
    out: list[list] = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return [tuple(iv) for iv in out]


def union_of_segments(segments: Iterable[Segment]) -> tuple:
    """Canonical form of a finite union of closed segments as a point set.

    Two unions are equal as sets iff their canonical forms compare equal.
    """
    by_line: dict[tuple, tuple[int, list]] = {}
    points = set()
    for a, b in segments:
        a, b = as_point(a), as_point(b)
        if a == b:
            points.add(a)
            continue
        key = _line_key(a, b)
        axis = _axis(a, b)
        by_line.setdefault(key, (axis, []))[1].append(tuple(sorted((a[axis], b[axis]))))
    lines = []
    merged_by_line = {}
    for key, (axis, ivs) in by_line.items():
        merged = merge_intervals(ivs)
        merged_by_line[key] = (axis, merged)
        lines.append((key, tuple(merged)))

    def covered(p: Point) -> bool:
        for key, (axis, merged) in merged_by_line.items():
            A, B, C = key
            if A * p.x + B * p.y == C and any(lo <= p[axis] <= hi for lo, hi in merged):
                return True
        return False

    isolated = sorted(p for p in points if not covered(p))
    return (tuple(sorted(lines)), tuple(isolated))
