"""Polygons as vertex sequences, and the dihedral permutation group.

A polygon is an ordered, possibly repetitive sequence of points.  Edge
``i`` joins ``V[i]`` to ``V[(i + 1) % n]``; a 1-gon has one singleton
edge and the 0-gon has none.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from polyconvex.errors import (
    IndexOutOfRange,
    NotIncreasing,
    ParseError,
    SizeMismatch,
)
from polyconvex.exact import (
    Point,
    Segment,
    as_point,
    dimension_of_point_set,
    orientation,
    parse_rational,
)


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Point, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(as_point(v) for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.vertices)

    def __repr__(self) -> str:
        inner = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"Polygon([{inner}])"


def edges(poly: Polygon) -> list[Segment]:
    v = poly.vertices
    n = len(v)
    return [Segment(v[i], v[(i + 1) % n]) for i in range(n)]


def is_ordinary(poly: Polygon) -> bool:
    return len(set(poly.vertices)) == len(poly.vertices)


def is_strict(poly: Polygon) -> bool:
    """No three vertices (as index triples i < j < k) are collinear."""
    v = poly.vertices
    return all(orientation(a, b, c) != 0 for a, b, c in combinations(v, 3))


def polygon_dim(poly: Polygon) -> int:
    return dimension_of_point_set(poly.vertices)


def reduce(poly: Polygon, alpha: int) -> Polygon:
    """Delete vertex ``alpha``, keeping the order of the rest."""
    n = len(poly)
    if not 0 <= alpha < n:
        raise IndexOutOfRange(f"alpha={alpha} outside [0, {n - 1}]")
    v = poly.vertices
    return Polygon(v[:alpha] + v[alpha + 1:])


def sub_polygon(poly: Polygon, indices: Sequence[int]) -> Polygon:
    n = len(poly)
    for k, i in enumerate(indices):
        if not 0 <= i < n:
            raise IndexOutOfRange(f"index {i} outside [0, {n - 1}]")
        if k and indices[k - 1] >= i:
            raise NotIncreasing(f"indices must be strictly increasing: {list(indices)}")
    v = poly.vertices
    return Polygon(tuple(v[i] for i in indices))


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``range(n)`` stored as its image list.

    Composition is left to right: ``(s * t)(i) == t(s(i))``.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"not a permutation: {self.mapping}")

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self) != len(other):
            raise SizeMismatch("permutations act on different index sets")
        return Permutation(tuple(other.mapping[j] for j in self.mapping))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        result = identity(len(self))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def theta(n: int) -> Permutation:
    """Cyclic shift ``i -> i + 1 (mod n)``."""
    return Permutation(tuple((i + 1) % n for i in range(n)))


def rho(n: int) -> Permutation:
    """Reflection ``i -> -i (mod n)``."""
    return Permutation(tuple((-i) % n for i in range(n)))


def dihedral_group(n: int) -> list[Permutation]:
    if n < 1:
        raise ValueError("n must be positive")
    t, r = theta(n), rho(n)
    out: list[Permutation] = []
    seen = set()
    tj = identity(n)
    for _ in range(n):
        for g in (tj, tj * r):
            if g.mapping not in seen:
                seen.add(g.mapping)
                out.append(g)
        tj = tj * t
    return out


def apply_permutation(poly: Polygon, sigma: Permutation) -> Polygon:
    """The polygon whose ``i``-th vertex is ``V[sigma(i)]``."""
    if len(sigma) != len(poly):
        raise SizeMismatch(f"permutation of size {len(sigma)} applied to a {len(poly)}-gon")
    v = poly.vertices
    return Polygon(tuple(v[j] for j in sigma.mapping))


def parse_polygon(text: str) -> Polygon:
    """Parse one ``x y`` vertex per line; blank lines and ``#`` comments are skipped."""
    verts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two rationals, got {raw!r}")
        try:
            verts.append(Point(parse_rational(parts[0]), parse_rational(parts[1])))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return Polygon(tuple(verts))


def format_polygon(poly: Polygon | Iterable[Point]) -> str:
    return "".join(f"{v.x} {v.y}\n" for v in poly)
