"""Property checks of the hereditariness theorems and test equivalences.

Each check consumes a :class:`GeneratorConfig` stream and returns a
:class:`CheckReport`; violations are report content, never exceptions.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from polyconvex.convexity import (
    edges_in_boundary,
    is_convex,
    is_convex_incremental,
    is_convex_ordinary_fast,
    is_convex_sub4,
    is_quasi_convex,
)
from polyconvex.exact import (
    Line,
    Point,
    Segment,
    convex_hull,
    format_rational,
    orientation,
    point_in_hull,
    point_on_segment,
    rational,
    segment_line_intersection,
    union_of_segments,
)
from polyconvex.harness.corpus import lookup
from polyconvex.harness.generators import (
    GeneratorConfig,
    generate,
    random_convex_polygon,
    random_interior_line,
)
from polyconvex.polygon import Polygon, edges, is_ordinary, polygon_dim, reduce, sub_polygon
from polyconvex.structure import CutResult, cut


def _coords(poly: Polygon) -> list[list[str]]:
    return [[format_rational(v.x), format_rational(v.y)] for v in poly]


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add_violation(self, poly: Polygon, reason: str, **extra) -> None:
        self.violations.append({"check": self.name, "reason": reason, "polygon": _coords(poly), **extra})

    def summary(self) -> dict:
        return {
            "check": self.name,
            "checked": self.checked,
            "violations": len(self.violations),
            "elapsed_ms": round(self.elapsed_ms, 3),
            **self.stats,
        }

    def json_lines(self) -> list[str]:
        return [json.dumps(v) for v in self.violations] + [json.dumps(self.summary())]


def _polygons(source) -> Iterable[Polygon]:
    if isinstance(source, GeneratorConfig):
        return generate(source)
    return source


def check_downward(source, max_violations: Optional[int] = 50) -> CheckReport:
    """Every reduction and every sub-polygon of an ordinary convex polygon is convex."""
    report = CheckReport("downward")
    start = time.perf_counter()
    seen = reductions = subs = 0
    for poly in _polygons(source):
        seen += 1
        if not is_ordinary(poly) or not is_convex(poly):
            continue
        report.checked += 1
        n = len(poly)
        for alpha in range(n):
            reductions += 1
            if not is_convex(reduce(poly, alpha)):
                report.add_violation(poly, "reduction not convex", alpha=alpha)
        for m in range(n + 1):
            for idx in combinations(range(n), m):
                subs += 1
                if not is_convex(sub_polygon(poly, idx)):
                    report.add_violation(poly, "sub-polygon not convex", indices=list(idx))
        if max_violations is not None and len(report.violations) >= max_violations:
            break
    report.stats.update(generated=seen, reductions=reductions, sub_polygons=subs)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def n4_counterexample_holds() -> bool:
    """square-0213: all four 3-gon reductions convex, the 4-gon itself not."""
    poly = lookup("square-0213").polygon
    return all(is_convex(reduce(poly, a)) for a in range(4)) and not is_convex(poly)


def check_upward(source, max_violations: Optional[int] = 50) -> CheckReport:
    """For n >= 5, convexity of all reductions forces convexity.

    Polygons with n < 5 satisfying the hypothesis but not the conclusion
    are tallied as ``small_n_counterexamples`` (they are expected to exist
    at n = 4).
    """
    report = CheckReport("upward")
    start = time.perf_counter()
    small = 0
    for poly in _polygons(source):
        n = len(poly)
        if n >= 5:
            report.checked += 1
        if is_convex(poly):
            continue
        if all(is_convex(reduce(poly, a)) for a in range(n)):
            if n >= 5:
                report.add_violation(poly, "all reductions convex but polygon is not")
            else:
                small += 1
        if max_violations is not None and len(report.violations) >= max_violations:
            break
    report.stats.update(
        small_n_counterexamples=small,
        n4_counterexample_confirmed=n4_counterexample_holds(),
    )
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def check_equivalence(source, max_violations: Optional[int] = 50) -> CheckReport:
    """Cross-validate the convexity tests against the definition oracle.

    On every polygon: the to-one-side test equals direct edge-in-boundary
    containment, dimension <= 1 implies convex, and all sub-4-gons convex
    implies convex.  On ordinary polygons additionally the fast test, the
    sub-4-gon test (n >= 4) and the incremental test (n >= 5) equal the
    oracle.
    """
    report = CheckReport("equivalence")
    start = time.perf_counter()
    ordinary_checked = 0
    for poly in _polygons(source):
        report.checked += 1
        n = len(poly)
        oracle = is_convex(poly)
        quasi = is_quasi_convex(poly)
        if quasi != edges_in_boundary(poly):
            report.add_violation(poly, "to-one-side differs from edge-in-boundary containment")
        if oracle and not quasi:
            report.add_violation(poly, "convex but not quasi-convex")
        if polygon_dim(poly) <= 1 and not oracle:
            report.add_violation(poly, "dimension <= 1 but not convex")
        sub4 = is_convex_sub4(poly)
        if not oracle and sub4:
            report.add_violation(poly, "all sub-4-gons convex but polygon is not")
        if is_ordinary(poly):
            ordinary_checked += 1
            if is_convex_ordinary_fast(poly) != oracle:
                report.add_violation(poly, "ordinary fast test differs from oracle", oracle=oracle)
            if n >= 4 and sub4 != oracle:
                report.add_violation(poly, "sub-4-gon test differs from oracle", oracle=oracle)
            if n >= 5 and is_convex_incremental(poly) != oracle:
                report.add_violation(poly, "incremental test differs from oracle", oracle=oracle)
        if max_violations is not None and len(report.violations) >= max_violations:
            break
    report.stats.update(ordinary_checked=ordinary_checked)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _probe_points(poly: Polygon, res: CutResult, steps: int = 6) -> list[Point]:
    xs = [v.x for v in poly]
    ys = [v.y for v in poly]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pts = [
        Point(rational(x0 + Fraction(i * (x1 - x0), steps)), rational(y0 + Fraction(j * (y1 - y0), steps)))
        for i in range(-1, steps + 2)
        for j in range(-1, steps + 2)
    ]
    # points on [P, Q] and just off it on both sides
    dx, dy = res.q.x - res.p.x, res.q.y - res.p.y
    span = max(abs(x1 - x0), abs(y1 - y0), 1)
    for k in range(-2, steps + 3):
        t = Fraction(k, steps)
        base = Point(rational(res.p.x + t * dx), rational(res.p.y + t * dy))
        pts.append(base)
        for eps in (Fraction(1, 1000), Fraction(-1, 1000)):
            pts.append(Point(rational(base.x - eps * dy / span), rational(base.y + eps * dx / span)))
    return pts


def validate_cut(poly: Polygon, line: Line, res: CutResult) -> list[str]:
    """Every postcondition of a cut of a strictly convex polygon; returns failures."""
    failures = []
    v = poly.vertices
    es = edges(poly)
    hits = set()
    for e in es:
        hit = segment_line_intersection(e, line)
        if isinstance(hit, Segment):
            failures.append("edge on the cutting line")
        elif hit is not None:
            hits.add(hit)
    if hits != {res.p, res.q} or res.p == res.q:
        failures.append(f"line meets edges in {len(hits)} points")
    for name, pt, idx in (("P", res.p, res.i), ("Q", res.q, res.j)):
        homes = [k for k, e in enumerate(es) if point_on_segment(pt, e, half_open=True)]
        if homes != [idx]:
            failures.append(f"{name} half-open edges {homes}, expected [{idx}]")
    if not res.i < res.j:
        failures.append("i >= j")
    if not (res.plus_convex and res.minus_convex):
        failures.append("a half is not convex")
    if not res.apart:
        failures.append("polygon to one side of [P, Q]")
    again = cut(poly, line.reversed())
    if (again.i, again.j, again.p, again.q) != (res.i, res.j, res.p, res.q):
        failures.append("reversed line gives a different cut")
    pq = Segment(res.p, res.q)
    if union_of_segments(edges(res.plus) + edges(res.minus)) != union_of_segments(es + [pq]):
        failures.append("edge union round trip")
    plus_sides = {orientation(res.p, res.q, x) for x in res.plus} - {0}
    minus_sides = {orientation(res.p, res.q, x) for x in res.minus} - {0}
    if len(plus_sides) != 1 or len(minus_sides) != 1 or plus_sides == minus_sides:
        failures.append("halves not on opposite sides of the cutting line")
    whole = convex_hull(v)
    hp, hm = convex_hull(res.plus.vertices), convex_hull(res.minus.vertices)
    for x in _probe_points(poly, res):
        in_p, in_m = point_in_hull(hp, x), point_in_hull(hm, x)
        if point_in_hull(whole, x) != (in_p or in_m):
            failures.append(f"hull union differs at {x}")
            break
        if (in_p and in_m) != point_on_segment(x, pq):
            failures.append(f"hull intersection differs from [P, Q] at {x}")
            break
    return failures


def check_cuts(count: int, seed: int = 0, n_min: int = 3, n_max: int = 10) -> CheckReport:
    """Random strictly convex polygons cut by random interior-crossing lines."""
    report = CheckReport("cut")
    start = time.perf_counter()
    rng = random.Random(seed)
    for _ in range(count):
        poly = random_convex_polygon(rng.randint(n_min, n_max), rng)
        line = random_interior_line(poly, rng)
        report.checked += 1
        res = cut(poly, line)
        for reason in validate_cut(poly, line, res):
            report.add_violation(poly, reason, line=[_coords(Polygon((line.p0, line.p1)))])
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
