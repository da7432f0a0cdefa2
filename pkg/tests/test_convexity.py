import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brute import brute_covers, brute_is_convex, brute_quasi_convex
from polyconvex.convexity import (
    GapPoint,
    SplitEdge,
    boundary_of_hull,
    classify,
    covers_boundary,
    edges_in_boundary,
    find_boundary_gap,
    find_split_edge,
    is_convex,
    is_convex_incremental,
    is_convex_ordinary_fast,
    is_convex_sub4,
    is_convex_subm,
    is_quasi_convex,
    side_verdict,
    to_one_side,
)
from polyconvex.counting import counting
from polyconvex.errors import BadM, NotOrdinary
from polyconvex.exact import Point, Segment, orientation
from polyconvex.polygon import Polygon, is_ordinary, polygon_dim, reduce, sub_polygon
from strategies import grid_polygons, polygons

H = Fraction(1, 2)
V0, V1, V2, V3 = Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)
SQUARE = Polygon((V0, V1, V2, V3))
SQUARE_0213 = Polygon((V0, V2, V1, V3))
REVISIT = Polygon([(0, 0), (0, 1), (1, 0), (0, 1)])
DOUBLE = Polygon((V0, V1, V2, V3) * 2)
HEXAGON = Polygon([(3, 0), (8, 1), (11, 6), (6, 7), (2, 5), (1, 1)])
PENTAGON = Polygon([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])


def test_to_one_side_examples():
    assert to_one_side(SQUARE.vertices, Segment(V0, V1))
    assert not to_one_side(SQUARE.vertices, Segment(V0, V2))
    assert to_one_side([V0], Segment(V0, V0))


def test_to_one_side_singleton_segment():
    # a corner admits a supporting line, an interior point does not
    tri = [Point(0, 0), Point(4, 0), Point(0, 4)]
    assert to_one_side(tri, Segment(Point(0, 0), Point(0, 0)))
    assert to_one_side(tri, Segment(Point(2, 0), Point(2, 0)))
    assert not to_one_side(tri, Segment(Point(1, 1), Point(1, 1)))


def test_side_verdict():
    v = side_verdict(SQUARE.vertices, V0, V1)
    assert v.all_nonneg and not v.all_nonpos and v.one_side
    v = side_verdict(SQUARE.vertices, V0, V2)
    assert not v.one_side


def test_quasi_convex_examples():
    assert is_quasi_convex(REVISIT)
    assert find_split_edge(SQUARE_0213) == SplitEdge(edge=0, j=2, k=3)
    assert is_quasi_convex(Polygon([(0, 0), (2, 2), (1, 1), (2, 2)]))


def test_split_witness_really_splits(square_0213):
    w = find_split_edge(square_0213)
    v = square_0213.vertices
    a, b = v[w.edge], v[(w.edge + 1) % 4]
    assert orientation(a, b, v[w.j]) * orientation(a, b, v[w.k]) == -1


def test_singleton_edge_inside_hull_gets_through_witness():
    poly = Polygon([(1, 1), (1, 1), (0, 0), (4, 0), (0, 4)])
    w = find_split_edge(poly)
    assert w is not None and w.edge == 0 and w.through is not None
    v = poly.vertices
    a, b = v[w.edge], v[w.through]
    assert orientation(a, b, v[w.j]) * orientation(a, b, v[w.k]) == -1
    assert w.to_json()["split_edge"]["through"] == w.through


def test_boundary_of_hull_examples():
    assert len(boundary_of_hull(SQUARE)) == 4
    assert boundary_of_hull(Polygon([(0, 0), (2, 0), (1, 0)])) == [Segment(Point(0, 0), Point(2, 0))]
    assert boundary_of_hull(Polygon([(7, 7)])) == [Segment(Point(7, 7), Point(7, 7))]
    assert boundary_of_hull(Polygon()) == []


def test_covers_boundary_examples():
    assert covers_boundary(SQUARE)
    assert covers_boundary(DOUBLE)
    gap = find_boundary_gap(REVISIT)
    # V0 = (0,0), V2 = (1,0): the uncovered chord is [V0, V2], witnessed at its midpoint
    assert gap == GapPoint(Point(H, 0), facet=0)


def test_gap_witness_is_uncovered():
    poly = Polygon([(0, 0), (1, 0), (0, 0), (0, 3), (3, 3), (3, 0), (2, 0), (3, 0), (3, 3), (0, 3)])
    assert is_quasi_convex(poly)
    gap = find_boundary_gap(poly)
    assert gap.point == Point(Fraction(3, 2), 0)
    from polyconvex.polygon import edges
    from polyconvex.exact import point_on_segment
    assert not any(point_on_segment(gap.point, e) for e in edges(poly))


def test_is_convex_examples():
    assert is_convex(DOUBLE)
    assert not is_convex(Polygon(DOUBLE.vertices[:7]))
    assert is_convex(SQUARE)
    assert not is_convex(SQUARE_0213)
    assert not is_convex(REVISIT)


@pytest.mark.parametrize("n", range(0, 4))
def test_all_small_polygons_convex(n):
    grid = [Point(x, y) for x in range(3) for y in range(3)]
    assert all(is_convex(Polygon(v)) for v in itertools.product(grid, repeat=n))


def test_fast_test_examples():
    assert is_convex_ordinary_fast(SQUARE)
    assert not is_convex_ordinary_fast(SQUARE_0213)
    assert is_convex_ordinary_fast(HEXAGON)
    with pytest.raises(NotOrdinary):
        is_convex_ordinary_fast(REVISIT)


def test_sub4_examples():
    assert not is_convex_sub4(SQUARE_0213)
    assert is_convex_sub4(HEXAGON)
    assert is_convex_sub4(Polygon([(0, 0), (1, 0), (0, 1)]))
    with counting() as c:
        is_convex_sub4(HEXAGON)
    assert c.oracle_calls == 15


def test_subm_examples():
    assert is_convex_subm(HEXAGON, 5)
    padded = Polygon([(0, 0), (1, 1), (1, 0), (0, 1), (-1, H)])
    assert not is_convex_subm(padded, 4)
    assert is_convex_subm(HEXAGON, 6) == is_convex(HEXAGON)
    with pytest.raises(BadM):
        is_convex_subm(HEXAGON, 3)
    with pytest.raises(BadM):
        is_convex_subm(HEXAGON, 7)


def test_incremental_examples():
    assert is_convex_incremental(HEXAGON)
    assert not is_convex_incremental(SQUARE_0213)
    assert is_convex_incremental(PENTAGON)
    with pytest.raises(NotOrdinary):
        is_convex_incremental(DOUBLE)


def test_incremental_memo_collapses_factorial():
    with counting() as memo:
        is_convex_incremental(HEXAGON)
    with counting() as plain:
        is_convex_incremental(HEXAGON, memoize=False)
    assert memo.oracle_calls == 15
    assert plain.oracle_calls == 6 * 5


def test_classify_report_json():
    r = classify(REVISIT)
    assert r.to_json() == {
        "n": 4, "dim": 2, "ordinary": False, "strict": False,
        "quasi_convex": True, "convex": False,
        "witness": {"gap_point": {"x": "1/2", "y": "0", "facet": 0}},
    }
    r = classify(SQUARE_0213)
    assert r.witness == SplitEdge(0, 2, 3)
    assert classify(Polygon()).convex


@given(polygons)
def test_oracle_matches_brute_force(poly):
    assert is_convex(poly) == brute_is_convex(poly.vertices)
    assert is_quasi_convex(poly) == brute_quasi_convex(list(poly.vertices))
    assert covers_boundary(poly) == brute_covers(list(poly.vertices))


@given(polygons)
def test_report_invariants(poly):
    r = classify(poly)
    assert not r.convex or r.quasi_convex
    assert r.dim > 1 or r.convex
    if r.ordinary:
        assert r.convex == r.quasi_convex
    if r.strict and r.n >= 3:
        assert r.ordinary
    assert (r.witness is None) == r.convex


@given(grid_polygons)
def test_one_side_equals_direct_containment(poly):
    assert is_quasi_convex(poly) == edges_in_boundary(poly)


@given(grid_polygons)
def test_sub4_sufficiency_without_ordinariness(poly):
    if is_convex_sub4(poly):
        assert is_convex(poly)


@given(st.lists(st.builds(Point, st.integers(-3, 3), st.integers(-3, 3)), unique=True, max_size=7).map(Polygon))
def test_tests_agree_on_ordinary(poly):
    oracle = is_convex(poly)
    assert is_convex_ordinary_fast(poly) == oracle
    if len(poly) >= 4:
        assert is_convex_sub4(poly) == oracle
    if len(poly) >= 5:
        assert is_convex_incremental(poly) == oracle


@given(st.lists(st.builds(Point, st.integers(-3, 3), st.integers(-3, 3)), unique=True, max_size=7).map(Polygon))
def test_reduction_of_ordinary_convex_is_convex(poly):
    if is_convex(poly):
        assert all(is_convex(reduce(poly, a)) for a in range(len(poly)))


@given(polygons.filter(lambda p: len(p) >= 5))
def test_upward_hereditariness(poly):
    if all(is_convex(reduce(poly, a)) for a in range(len(poly))):
        assert is_convex(poly)


def test_n4_upward_counterexample():
    assert all(is_convex(reduce(SQUARE_0213, a)) for a in range(4))
    assert not is_convex(SQUARE_0213)
