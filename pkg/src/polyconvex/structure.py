"""Constructions on convex polygons: line cuts, the apart relation,
convex orderings of point sets and their dihedral uniqueness."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Optional

from polyconvex.convexity import is_convex, side_verdict, to_one_side
from polyconvex.errors import (
    Degenerate,
    IndexOutOfRange,
    InvariantBreach,
    NoInteriorCrossing,
    NotAllExtreme,
    NotConvex,
    PreconditionViolated,
    StrictnessRequired,
    TooFew,
    TooLarge,
)
from polyconvex.exact import (
    Line,
    Point,
    Segment,
    as_point,
    convex_hull,
    segment_line_intersection,
    union_of_segments,
)
from polyconvex.polygon import (
    Permutation,
    Polygon,
    apply_permutation,
    dihedral_group,
    edges,
    is_ordinary,
    is_strict,
    reduce,
)

MAX_BRUTE_FORCE = 7


def _pt(p: Point) -> list[str]:
    return [str(p.x), str(p.y)]


@dataclass(frozen=True)
class CutResult:
    i: int
    j: int
    p: Point
    q: Point
    plus: Polygon
    minus: Polygon
    plus_convex: bool
    minus_convex: bool
    apart: bool

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "p": _pt(self.p),
            "q": _pt(self.q),
            "plus": [_pt(v) for v in self.plus],
            "minus": [_pt(v) for v in self.minus],
            "plus_convex": self.plus_convex,
            "minus_convex": self.minus_convex,
            "apart": self.apart,
        }


def crosses_interior(poly: Polygon, line: Line) -> bool:
    """Some vertex lies strictly left of ``line`` and some strictly right."""
    verdict = side_verdict(poly.vertices, line.p0, line.p1)
    return not verdict.one_side


def _sq_len(s: Segment):
    return (s.b.x - s.a.x) ** 2 + (s.b.y - s.a.y) ** 2


def cut(poly: Polygon, line: Line, allow_nonstrict: bool = False) -> CutResult:
    """Split a convex polygon along a line through the interior of its hull.

    Each crossing point is attached to a half-open edge ``[V_k, V_k+1)``
    containing it.  For strict input that edge is unique.  Otherwise the
    shortest such edge is used (lowest index on ties), and ``P`` is the
    crossing with the smaller edge index.
    """
    if not is_convex(poly):
        raise NotConvex("cut requires a convex polygon")
    strict = is_strict(poly)
    if not strict and not allow_nonstrict:
        raise StrictnessRequired("polygon is not strict; pass allow_nonstrict to cut anyway")
    if not crosses_interior(poly, line):
        raise NoInteriorCrossing("line does not meet the interior of the hull")

    v = poly.vertices
    n = len(v)
    candidates: dict[Point, list[int]] = {}
    for k, seg in enumerate(edges(poly)):
        if seg.degenerate:
            continue
        hit = segment_line_intersection(seg, line)
        if hit is None:
            continue
        if isinstance(hit, Segment):
            raise InvariantBreach(f"edge {k} lies on a line through the interior")
        if hit != seg.b:
            candidates.setdefault(hit, []).append(k)
    if len(candidates) != 2:
        raise InvariantBreach(f"line meets the edges in {len(candidates)} points, expected 2")

    chosen = []
    for point, ks in candidates.items():
        if strict and len(ks) != 1:
            raise InvariantBreach(f"crossing point {point} on several edges of a strict polygon")
        k = min(ks, key=lambda k: (_sq_len(Segment(v[k], v[(k + 1) % n])), k))
        chosen.append((k, point))
    (i, p), (j, q) = sorted(chosen)
    if i == j:
        raise InvariantBreach("both crossing points on one half-open edge")

    plus = Polygon(v[: i + 1] + (p, q) + v[j + 1:])
    minus = Polygon((p,) + v[i + 1: j + 1] + (q,))
    result = CutResult(
        i=i,
        j=j,
        p=p,
        q=q,
        plus=plus,
        minus=minus,
        plus_convex=is_convex(plus),
        minus_convex=is_convex(minus),
        apart=not to_one_side(v, Segment(p, q)),
    )
    if strict and not (result.plus_convex and result.minus_convex and result.apart):
        raise InvariantBreach(f"cut of a strictly convex polygon violated its postconditions: {result}")
    return result


def _require_strictly_convex(poly: Polygon) -> None:
    if not (is_strict(poly) and is_convex(poly)):
        raise PreconditionViolated("polygon must be strictly convex")


def check_apart(poly: Polygon, alpha: int, i: int, beta: int) -> bool:
    """Whether ``V[alpha], V[beta]`` are to one side of the chord ``[V[0], V[i]]``.

    For strictly convex input this is always false.
    """
    n = len(poly)
    if not 1 <= alpha < i < beta <= n - 1:
        raise PreconditionViolated(f"need 1 <= alpha < i < beta <= {n - 1}, got ({alpha}, {i}, {beta})")
    _require_strictly_convex(poly)
    v = poly.vertices
    return to_one_side([v[alpha], v[beta], v[0], v[i]], Segment(v[0], v[i]))


@dataclass(frozen=True)
class OrderingResult:
    polygon: Polygon
    orderings_found: Optional[int] = None


def strict_convex_ordering(points: Iterable) -> OrderingResult:
    """Counterclockwise enumeration of a point set in strictly convex position."""
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) < 3:
        raise TooFew(f"need at least 3 distinct points, got {len(pts)}")
    hull = convex_hull(pts)
    if hull.dim < 2:
        raise Degenerate(f"point set has dimension {hull.dim}")
    if len(hull.extremes) != len(pts):
        inner = sorted(set(pts) - set(hull.extremes))
        raise NotAllExtreme(
            "not extreme: " + ", ".join(f"({p.x}, {p.y})" for p in inner)
        )
    poly = Polygon(hull.extremes)
    if not (is_strict(poly) and is_convex(poly) and set(poly.vertices) == set(pts)):
        raise InvariantBreach("hull ordering is not strictly convex")
    return OrderingResult(poly)


@dataclass(frozen=True)
class OrderingCount:
    base: Polygon
    total: int
    count: int
    permutations: tuple[Permutation, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def matches_dihedral(self) -> bool:
        return set(s.mapping for s in self.permutations) == set(
            g.mapping for g in dihedral_group(self.n)
        )


def count_strict_convex_orderings(points: Iterable) -> OrderingCount:
    """Brute force over all vertex orders of a convex-position point set.

    Permutations are reported relative to the counterclockwise base
    ordering, so the qualifying set should be the dihedral group.
    """
    pts = set(as_point(p) for p in points)
    if len(pts) > MAX_BRUTE_FORCE:
        raise TooLarge(f"brute force is limited to n <= {MAX_BRUTE_FORCE}, got {len(pts)}")
    base = strict_convex_ordering(pts).polygon
    n = len(base)
    found = []
    total = 0
    for mapping in permutations(range(n)):
        total += 1
        sigma = Permutation(mapping)
        candidate = apply_permutation(base, sigma)
        if is_strict(candidate) and is_convex(candidate):
            found.append(sigma)
    return OrderingCount(base, total, len(found), tuple(found))


def verify_reduction_sets(poly: Polygon, alpha: int) -> bool:
    """Deleting a non-extreme vertex keeps both the hull and the edge union."""
    n = len(poly)
    if not 0 <= alpha < n:
        raise IndexOutOfRange(f"alpha={alpha} outside [0, {n - 1}]")
    if not (is_ordinary(poly) and is_convex(poly)):
        raise PreconditionViolated("polygon must be ordinary and convex")
    hull = convex_hull(poly.vertices)
    if poly[alpha] in hull.extremes:
        raise PreconditionViolated(f"vertex {alpha} is an extreme point of the hull")
    reduced = reduce(poly, alpha)
    same_hull = set(convex_hull(reduced.vertices).extremes) == set(hull.extremes)
    same_edges = union_of_segments(edges(reduced)) == union_of_segments(edges(poly))
    return same_hull and same_edges
