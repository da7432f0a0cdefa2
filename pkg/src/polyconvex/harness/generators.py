"""Reproducible polygon streams.

``exhaustive_grid`` enumerates every vertex sequence over the integer grid
``[0, grid_max]^2``.  ``random_convex_position`` samples lattice points on the
boundary of a lens bounded by two parabolas, which are always in strictly
convex position.
``degenerate_walks`` walks back and forth over at most three collinear
anchors, giving polygons of dimension at most one.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from polyconvex.exact import Line, Point, convex_hull, rational
from polyconvex.polygon import Polygon

MODES = ("exhaustive_grid", "random_convex_position", "degenerate_walks")


@dataclass(frozen=True)
class GeneratorConfig:
    mode: str
    n: int
    grid_max: int = 2
    seed: int = 0
    count: int = 1000  # instances drawn by the random modes

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {', '.join(MODES)}")
        if self.n < 0:
            raise ValueError("n must be non-negative")


def grid_points(grid_max: int) -> list[Point]:
    return [Point(x, y) for x in range(grid_max + 1) for y in range(grid_max + 1)]


def random_convex_polygon(n: int, rng: random.Random) -> Polygon:
    """A strictly convex ``n``-gon (n >= 3) with integer vertices, random start and orientation.

    Vertices are drawn from the lattice points on the two parabolic arcs
    ``y = x**2`` and ``y = 2 r**2 - x**2`` with ``|x| <= r``.  They bound a
    region with no straight boundary piece, so no three are collinear.
    """
    if n < 3:
        raise ValueError("a strictly convex polygon needs at least 3 vertices")
    r = max(4, n)
    chosen: set[Point] = set()
    while len(chosen) < n:
        x = rng.randint(-r, r)
        y = x * x if rng.random() < 0.5 else 2 * r * r - x * x
        chosen.add(Point(x, y))
    ring = list(convex_hull(chosen).extremes)
    assert len(ring) == n
    shift = rng.randrange(n)
    ring = ring[shift:] + ring[:shift]
    if rng.random() < 0.5:
        ring = [ring[0]] + ring[:0:-1]
    return Polygon(tuple(ring))


def random_interior_line(poly: Polygon, rng: random.Random) -> Line:
    """A rational line through two distinct interior points of a strictly convex polygon."""
    v = poly.vertices

    def interior_point() -> Point:
        a, b, c = rng.sample(v, 3)
        wa, wb, wc = (rng.randint(1, 9) for _ in range(3))
        total = wa + wb + wc
        return Point(
            rational(Fraction(wa * a.x + wb * b.x + wc * c.x, total)),
            rational(Fraction(wa * a.y + wb * b.y + wc * c.y, total)),
        )

    p = interior_point()
    q = interior_point()
    while q == p:
        q = interior_point()
    return Line(p, q)


def degenerate_walk(n: int, rng: random.Random) -> Polygon:
    """A length-``n`` sequence over at most three collinear anchor points."""
    base = Point(rng.randint(-5, 5), rng.randint(-5, 5))
    dx, dy = 0, 0
    while (dx, dy) == (0, 0):
        dx, dy = rng.randint(-3, 3), rng.randint(-3, 3)
    step = Fraction(1, rng.randint(1, 3))
    ts = rng.sample(range(-3, 4), rng.randint(1, 3))
    anchors = [Point(rational(base.x + t * step * dx), rational(base.y + t * step * dy)) for t in ts]
    return Polygon(tuple(rng.choice(anchors) for _ in range(n)))


def generate(config: GeneratorConfig) -> Iterator[Polygon]:
    if config.mode == "exhaustive_grid":
        grid = grid_points(config.grid_max)
        for verts in itertools.product(grid, repeat=config.n):
            yield Polygon(verts)
        return
    rng = random.Random(config.seed)
    make = random_convex_polygon if config.mode == "random_convex_position" else degenerate_walk
    for _ in range(config.count):
        yield make(config.n, rng)
