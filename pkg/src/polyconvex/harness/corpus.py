"""Worked examples and counterexamples with their exact expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from polyconvex.convexity import GapPoint, classify, is_convex
from polyconvex.exact import Line, Point
from polyconvex.polygon import Polygon, reduce
from polyconvex.structure import cut

V0, V1, V2, V3 = Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)
HALF = Fraction(1, 2)

HEXAGON = Polygon([(3, 0), (8, 1), (11, 6), (6, 7), (2, 5), (1, 1)])
PENTAGON = Polygon([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])
DOUBLE_SQUARE = Polygon((V0, V1, V2, V3, V0, V1, V2, V3))
COLLINEAR_CUT = Polygon([(0, 0), (4, 4), (8, 0), (2, 0), (6, 0)])
COLLINEAR_CUT_LINE = Line((4, 4), (4, 0))


@dataclass(frozen=True)
class Counterexample:
    name: str
    polygon: Polygon
    expected: dict
    notes: str = ""
    line: Optional[Line] = field(default=None)


def corpus() -> list[Counterexample]:
    return [
        Counterexample(
            "square-0123",
            Polygon((V0, V1, V2, V3)),
            {"convex": True, "quasi_convex": True, "ordinary": True, "strict": True},
            "unit square in counterclockwise order",
        ),
        Counterexample(
            "square-0213",
            Polygon((V0, V2, V1, V3)),
            {"convex": False, "quasi_convex": False, "ordinary": True, "all_reductions_convex": True},
            "same vertex set, crossing order; every 3-gon reduction is convex, so n >= 5 "
            "is needed for upward hereditariness",
        ),
        Counterexample(
            "triangle-revisit",
            Polygon((V0, V1, V2, V1)),
            {
                "convex": False,
                "quasi_convex": True,
                "ordinary": False,
                "gap_witness": Point(HALF, HALF),
            },
            "revisiting a vertex leaves the chord [V0, V2] uncovered",
        ),
        Counterexample(
            "double-square",
            DOUBLE_SQUARE,
            {"convex": True, "ordinary": False},
            "the square traced twice",
        ),
        Counterexample(
            "double-square-reduced",
            reduce(DOUBLE_SQUARE, 1),
            {"convex": False},
            "removing V1 once from the doubled square breaks convexity",
        ),
        Counterexample(
            "double-traversal-8gon",
            DOUBLE_SQUARE,
            {"convex": True},
            "p1..p8 tracing the unit square twice counterclockwise",
        ),
        Counterexample(
            "double-traversal-p7",
            Polygon(DOUBLE_SQUARE.vertices[:7]),
            {"convex": False},
            "p8 removed; the closing edge becomes a diagonal",
        ),
        Counterexample(
            "hexagon",
            HEXAGON,
            {"convex": True, "ordinary": True, "strict": True},
            "convex hexagon whose reductions stay convex",
        ),
        Counterexample(
            "collinear-cut",
            COLLINEAR_CUT,
            {
                "convex": True,
                "ordinary": True,
                "strict": False,
                "cut_i": 1,
                "cut_j": 3,
                "plus_convex": False,
                "all_reductions_convex": False,
            },
            "ordinary but not strict; cutting along x = 4 leaves a non-convex plus half. "
            "Deleting V0 (or V2) leaves the chord [V4, V1] inside the hull, so this "
            "ordinary convex 5-gon has non-convex reductions",
            line=COLLINEAR_CUT_LINE,
        ),
    ]


def lookup(name: str) -> Counterexample:
    for c in corpus():
        if c.name == name:
            return c
    raise KeyError(name)


def evaluate(c: Counterexample) -> dict:
    """Compute every predicate named in ``c.expected``."""
    report = classify(c.polygon)
    actual: dict = {}
    for key in c.expected:
        if key in ("convex", "quasi_convex", "ordinary", "strict"):
            actual[key] = getattr(report, key)
        elif key == "gap_witness":
            w = report.witness
            actual[key] = w.point if isinstance(w, GapPoint) else None
        elif key == "all_reductions_convex":
            actual[key] = all(is_convex(reduce(c.polygon, a)) for a in range(len(c.polygon)))
    if any(k in c.expected for k in ("cut_i", "cut_j", "plus_convex")):
        res = cut(c.polygon, c.line, allow_nonstrict=True)
        actual.update(cut_i=res.i, cut_j=res.j, plus_convex=res.plus_convex)
    return actual


def verify_corpus() -> list[tuple[Counterexample, dict, bool]]:
    out = []
    for c in corpus():
        actual = evaluate(c)
        out.append((c, actual, actual == c.expected))
    return out
