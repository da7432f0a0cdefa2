"""Predicate-count benchmarks of the convexity tests."""

from __future__ import annotations

import math
import random
from statistics import linear_regression
from typing import Sequence

from polyconvex.convexity import (
    is_convex,
    is_convex_incremental,
    is_convex_sub4,
    is_quasi_convex,
)
from polyconvex.counting import OpCounter, counting
from polyconvex.errors import GuardrailExceeded, PreconditionViolated
from polyconvex.harness.generators import random_convex_polygon

ALGORITHMS = {
    "oracle": is_convex,
    "one_side": is_quasi_convex,
    "sub4": is_convex_sub4,
    "incremental": is_convex_incremental,
}
MAX_N = 512
MAX_N_INCREMENTAL = 18
MAX_N_UNMEMOIZED = 9


def bench(
    algorithm: str,
    n_values: Sequence[int],
    seed: int = 0,
    memoize: bool = True,
) -> list[tuple[int, OpCounter]]:
    """Count predicate calls of ``algorithm`` on random strictly convex n-gons."""
    if algorithm not in ALGORITHMS:
        raise PreconditionViolated(f"unknown algorithm {algorithm!r}")
    if algorithm == "incremental":
        limit = MAX_N_INCREMENTAL if memoize else MAX_N_UNMEMOIZED
    else:
        limit = MAX_N
    for n in n_values:
        if not 3 <= n <= limit:
            raise GuardrailExceeded(f"{algorithm}: n={n} outside [3, {limit}]")
    rows = []
    for n in n_values:
        poly = random_convex_polygon(n, random.Random(seed * 1_000_003 + n))
        with counting() as counter:
            if algorithm == "incremental":
                verdict = is_convex_incremental(poly, memoize=memoize)
            else:
                verdict = ALGORITHMS[algorithm](poly)
        if not verdict:
            raise AssertionError(f"{algorithm} rejected a strictly convex {n}-gon")
        rows.append((n, counter))
    return rows


def fit_loglog_slope(ns: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of log(value) against log(n)."""
    slope, _ = linear_regression([math.log(n) for n in ns], [math.log(v) for v in values])
    return slope


def to_csv(rows: list[tuple[int, OpCounter]]) -> str:
    lines = ["n,orientation_calls,oracle_calls"]
    lines += [f"{n},{c.orientation_calls},{c.oracle_calls}" for n, c in rows]
    return "\n".join(lines) + "\n"
