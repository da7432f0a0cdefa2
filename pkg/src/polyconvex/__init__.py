"""Exact convexity tests for polygons given as vertex sequences."""

from polyconvex.convexity import (
    ConvexityReport,
    GapPoint,
    SideVerdict,
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
from polyconvex.counting import OpCounter, counting
from polyconvex.exact import (
    Hull,
    Line,
    Point,
    Segment,
    convex_hull,
    dimension_of_point_set,
    orientation,
    point_on_segment,
    segment_line_intersection,
)
from polyconvex.polygon import (
    Permutation,
    Polygon,
    apply_permutation,
    dihedral_group,
    edges,
    is_ordinary,
    is_strict,
    polygon_dim,
    reduce,
    sub_polygon,
)
from polyconvex.structure import (
    CutResult,
    OrderingResult,
    check_apart,
    count_strict_convex_orderings,
    cut,
    strict_convex_ordering,
    verify_reduction_sets,
)

__version__ = "0.1.0"
