"""Operation counters used by the benchmark harness.

Counting is off unless a :func:`counting` block is active, so the hot
predicates pay only a context-variable lookup.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator


@dataclass
class OpCounter:
    orientation_calls: int = 0
    oracle_calls: int = 0

    def reset(self) -> None:
        self.orientation_calls = 0
        self.oracle_calls = 0


ACTIVE: ContextVar[OpCounter | None] = ContextVar("polyconvex_counter", default=None)


@contextmanager
def counting(counter: OpCounter | None = None) -> Iterator[OpCounter]:
    """Activate ``counter`` (a fresh one by default) for the enclosed block."""
    counter = OpCounter() if counter is None else counter
    token = ACTIVE.set(counter)
    try:
        yield counter
    finally:
        ACTIVE.reset(token)


def count_oracle_call() -> None:
    counter = ACTIVE.get()
    if counter is not None:
        counter.oracle_calls += 1
