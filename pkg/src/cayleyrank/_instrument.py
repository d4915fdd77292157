"""Opt-in operation counters used by the complexity tests.

Counting is off unless a ``counting()`` block is active, in which case the
codecs report how many big-integer operations and small-number comparisons
they performed.
"""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from typing import Iterator

_active: Counter | None = None


def add(kind: str, amount: int = 1) -> None:
    if _active is not None:
        _active[kind] += amount


@contextmanager
def counting() -> Iterator[Counter]:
    global _active
    saved = _active
    _active = Counter()
    try:
        yield _active
    finally:
        _active = saved
