"""Convexity of vertex sequences.

The ground truth is :func:`is_convex`: the union of the edges must equal
the boundary of the convex hull of the vertex set.  Set equality is split
into two one-sided checks, ``edges within boundary`` (quasi-convexity,
decided edge by edge with orientation signs) and ``boundary within edges``
(decided facet by facet with exact 1-D interval unions).

The remaining tests (ordinary fast path, all sub-4-gons, all sub-m-gons,
recursive reductions) are alternative deciders that must agree with the
oracle under their stated hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Union

from polyconvex.counting import count_oracle_call
from polyconvex.errors import BadM, NotOrdinary
from polyconvex.exact import (
    Point,
    Segment,
    convex_hull,
    merge_intervals,
    orientation,
    point_in_hull,
    point_on_segment,
    rational,
)
from polyconvex.polygon import (
    Polygon,
    edges,
    is_ordinary,
    is_strict,
    polygon_dim,
    sub_polygon,
)


@dataclass(frozen=True)
class SideVerdict:
    """Weak sign summary of a point family against a directed line."""

    all_nonneg: bool
    all_nonpos: bool

    @property
    def one_side(self) -> bool:
        return self.all_nonneg or self.all_nonpos


@dataclass(frozen=True)
class SplitEdge:
    """Edge ``edge`` has vertices ``j`` and ``k`` strictly on opposite sides.

    For a singleton edge the line used is the one through the edge point
    and vertex ``through``.
    """

    edge: int
    j: int
    k: int
    through: Optional[int] = None

    def to_json(self) -> dict:
        body = {"edge": self.edge, "j": self.j, "k": self.k}
        if self.through is not None:
            body["through"] = self.through
        return {"split_edge": body}


@dataclass(frozen=True)
class GapPoint:
    """A point of the hull boundary not covered by any edge."""

    point: Point
    facet: int

    def to_json(self) -> dict:
        return {"gap_point": {"x": str(self.point.x), "y": str(self.point.y), "facet": self.facet}}


Witness = Union[SplitEdge, GapPoint]


@dataclass(frozen=True)
class ConvexityReport:
    n: int
    dim: int
    ordinary: bool
    strict: bool
    quasi_convex: bool
    convex: bool
    witness: Optional[Witness] = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "ordinary": self.ordinary,
            "strict": self.strict,
            "quasi_convex": self.quasi_convex,
            "convex": self.convex,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def side_verdict(points: Iterable, a, b) -> SideVerdict:
    nonneg = nonpos = True
    for p in points:
        s = orientation(a, b, p)
        if s > 0:
            nonpos = False
        elif s < 0:
            nonneg = False
    return SideVerdict(nonneg, nonpos)


def to_one_side(points: Iterable, seg: Segment) -> bool:
    """Whether some line containing ``seg`` supports ``points`` together with ``seg``.

    For a proper segment the line is forced.  For a singleton segment a
    supporting line through it exists iff the point is not in the open
    interior of the hull.
    """
    a, b = seg
    if a != b:
        return side_verdict(points, a, b).one_side
    return not point_in_hull(convex_hull([*points, a]), a, strict=True)


def _split_at(v, a, b) -> Optional[tuple[int, int]]:
    pos = neg = None
    for idx, p in enumerate(v):
        s = orientation(a, b, p)
        if s > 0 and pos is None:
            pos = idx
        elif s < 0 and neg is None:
            neg = idx
        if pos is not None and neg is not None:
            return (pos, neg) if pos < neg else (neg, pos)
    return None


def find_split_edge(poly: Polygon) -> Optional[SplitEdge]:
    """First edge the polygon is not to one side of, with a witness pair."""
    v = poly.vertices
    n = len(v)
    hull = None
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        if a != b:
            pair = _split_at(v, a, b)
            if pair is not None:
                return SplitEdge(i, *pair)
            continue
        if hull is None:
            hull = convex_hull(v)
        if point_in_hull(hull, a, strict=True):
            # an interior point: every line through it splits the vertices
            m = next(idx for idx, p in enumerate(v) if p != a)
            pair = _split_at(v, a, v[m])
            if pair is None:
                raise AssertionError("interior vertex without a splitting pair")
            return SplitEdge(i, *pair, through=m)
    return None


def is_quasi_convex(poly: Polygon) -> bool:
    return find_split_edge(poly) is None


def boundary_of_hull(poly: Polygon) -> list[Segment]:
    """Boundary of the hull as segments: facets, one segment, one point or nothing."""
    hull = convex_hull(poly.vertices)
    if hull.dim == 2:
        return hull.facets()
    if hull.dim == 1:
        return [Segment(*hull.extremes)]
    if hull.dim == 0:
        return [Segment(hull.extremes[0], hull.extremes[0])]
    return []


def edges_in_boundary(poly: Polygon) -> bool:
    """Direct check that every edge lies in the hull boundary.

    A straight piece of the boundary of a planar convex polygon lies in a
    single facet, so each proper edge must fit inside one facet and each
    singleton edge must sit on some facet.
    """
    hull = convex_hull(poly.vertices)
    if hull.dim <= 1:
        return True
    facets = hull.facets()
    for a, b in edges(poly):
        if not any(point_on_segment(a, f) and point_on_segment(b, f) for f in facets):
            return False
    return True


def _covering_gap(facet: Segment, pieces: list[Segment]) -> Optional[Point]:
    a, b = facet
    if a == b:
        return None if any(point_on_segment(a, s) for s in pieces) else a
    axis = 0 if a.x != b.x else 1
    lo, hi = sorted((a[axis], b[axis]))
    intervals = []
    for p, q in pieces:
        if p != q and point_on_segment(p, facet) and point_on_segment(q, facet):
            intervals.append(tuple(sorted((p[axis], q[axis]))))
    reach = lo
    gap = None
    for s, e in merge_intervals(intervals):
        if s > reach:
            gap = (reach, s)
            break
        reach = max(reach, e)
    if gap is None and reach < hi:
        gap = (reach, hi)
    if gap is None:
        return None
    mid = Fraction(gap[0] + gap[1]) / 2
    t = (mid - a[axis]) / (Fraction(b[axis]) - a[axis])
    return Point(rational(a.x + t * (b.x - a.x)), rational(a.y + t * (b.y - a.y)))


def find_boundary_gap(poly: Polygon) -> Optional[GapPoint]:
    """A boundary point missed by every edge, or ``None`` if the edges cover it."""
    pieces = edges(poly)
    for idx, facet in enumerate(boundary_of_hull(poly)):
        gap = _covering_gap(facet, pieces)
        if gap is not None:
            return GapPoint(gap, idx)
    return None


def covers_boundary(poly: Polygon) -> bool:
    return find_boundary_gap(poly) is None


def is_convex(poly: Polygon) -> bool:
    """Definition oracle: union of edges equals the hull boundary."""
    count_oracle_call()
    if polygon_dim(poly) <= 1:
        return True
    return is_quasi_convex(poly) and covers_boundary(poly)


def classify(poly: Polygon) -> ConvexityReport:
    dim = polygon_dim(poly)
    split = find_split_edge(poly)
    witness: Optional[Witness] = split
    if dim <= 1:
        convex = True
    elif split is not None:
        convex = False
    else:
        witness = find_boundary_gap(poly)
        convex = witness is None
    return ConvexityReport(
        n=len(poly),
        dim=dim,
        ordinary=is_ordinary(poly),
        strict=is_strict(poly),
        quasi_convex=split is None,
        convex=convex,
        witness=witness,
    )


def _require_ordinary(poly: Polygon) -> None:
    if not is_ordinary(poly):
        raise NotOrdinary("the test is only valid for polygons with distinct vertices")


def is_convex_ordinary_fast(poly: Polygon) -> bool:
    _require_ordinary(poly)
    return is_quasi_convex(poly)


def is_convex_subm(poly: Polygon, m: int) -> bool:
    n = len(poly)
    if not 4 <= m <= n:
        raise BadM(f"m={m} outside [4, {n}]")
    return all(is_convex(sub_polygon(poly, idx)) for idx in combinations(range(n), m))


def is_convex_sub4(poly: Polygon) -> bool:
    if len(poly) < 4:
        return True
    return is_convex_subm(poly, 4)


def is_convex_incremental(poly: Polygon, memoize: bool = True) -> bool:
    """Recursive test through all reductions, down to the oracle at n <= 4.

    With ``memoize`` the recursion is keyed by the set of surviving
    indices, so each sub-polygon is decided once.
    """
    _require_ordinary(poly)
    v = poly.vertices
    n = len(v)
    memo: dict[int, bool] = {}

    def decide(mask: int, size: int) -> bool:
        if memoize and mask in memo:
            return memo[mask]
        if size <= 4:
            result = is_convex(Polygon(tuple(v[i] for i in range(n) if mask >> i & 1)))
        else:
            result = all(
                decide(mask & ~(1 << i), size - 1) for i in range(n) if mask >> i & 1
            )
        if memoize:
            memo[mask] = result
        return result

    return decide((1 << n) - 1, n)
