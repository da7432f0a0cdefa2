"""Generators, the counterexample corpus, property checks and benchmarks."""

from polyconvex.harness.bench import bench, fit_loglog_slope
from polyconvex.harness.checks import (
    CheckReport,
    check_downward,
    check_cuts,
    check_equivalence,
    check_upward,
    validate_cut,
)
from polyconvex.harness.corpus import Counterexample, corpus, lookup, verify_corpus
from polyconvex.harness.generators import (
    GeneratorConfig,
    degenerate_walk,
    generate,
    random_convex_polygon,
    random_interior_line,
)
