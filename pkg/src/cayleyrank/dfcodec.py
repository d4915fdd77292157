"""Lexicographic rank/unrank of strictly decreasing sequences.

``DF(a, b)`` is the set of sequences ``a >= v_1 > v_2 > ... > v_b >= 1``.
There are ``C(a, b)`` of them and the rank of ``v`` in lexicographic order is
``sum_i C(v_i - 1, b - i + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from cayleyrank import _instrument

# Above this size a full Pascal triangle stops being cheap; rows are then
# produced on demand with math.comb.
PASCAL_LIMIT = 256


class RankOutOfRange(ValueError):
    pass


class BinomialTable:
    """Binomial coefficients ``C(y, s)`` for ``0 <= y <= n_max``.

    Out-of-triangle queries (``s > y`` or ``s < 0``) return 0.  Small tables
    are filled eagerly from Pascal's rule; larger ones cache ``math.comb``
    results as they are requested.
    """

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        self.n_max = n_max
        self._rows: list[list[int]] | None = None
        self._cache: dict[tuple[int, int], int] = {}
        if n_max <= PASCAL_LIMIT:
            rows = [[1]]
            for y in range(1, n_max + 1):
                above = rows[-1]
                rows.append([1] + [above[s - 1] + above[s] for s in range(1, y)] + [1])
            self._rows = rows

    def __call__(self, y: int, s: int) -> int:
        if s < 0 or s > y or y < 0:
            return 0
        if y > self.n_max:
            raise IndexError(f"C({y}, {s}) is beyond the table size {self.n_max}")
        if self._rows is not None:
            return self._rows[y][s]
        key = (y, s)
        value = self._cache.get(key)
        if value is None:
            value = self._cache[key] = math.comb(y, s)
        return value

    def row(self, y: int) -> list[int]:
        return [self(y, s) for s in range(y + 1)]


@dataclass(frozen=True)
class DFSpace:
    """Universe size ``a`` and sequence length ``b``; ``b = 0`` is allowed."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or not 0 <= self.b <= self.a:
            raise ValueError(f"invalid decreasing-sequence space DF({self.a}, {self.b})")

    @property
    def size(self) -> int:
        return math.comb(self.a, self.b)


def _table_for(space: DFSpace, table: BinomialTable | None) -> BinomialTable:
    if table is None or table.n_max < space.a:
        return BinomialTable(space.a)
    return table


def check_decreasing(space: DFSpace, values: Sequence[int]) -> None:
    if len(values) != space.b:
        raise ValueError(f"expected {space.b} values for DF({space.a}, {space.b}), got {len(values)}")
    upper = space.a + 1
    for v in values:
        if not 1 <= v < upper:
            raise ValueError(f"{tuple(values)} is not strictly decreasing within 1..{space.a}")
        upper = v


def _use_walk(space: DFSpace, method: str) -> bool:
    if method == "auto":
        # a walk costs ~a big-int steps; table lookups cost ~b^2 once
        # math.comb has to build each large coefficient
        return space.b * space.b > 2 * space.a
    if method not in ("table", "walk"):
        raise ValueError(f"unknown method {method!r}")
    return method == "walk"


def df_rank(
    space: DFSpace,
    values: Sequence[int],
    table: BinomialTable | None = None,
    method: str = "auto",
) -> int:
    """Lexicographic rank of a decreasing sequence in ``space``."""
    check_decreasing(space, values)
    if _use_walk(space, method):
        return _rank_walk(values)
    binom = _table_for(space, table)
    b = space.b
    _instrument.add("bigint", 2 * b)
    return sum(binom(v - 1, b - i) for i, v in enumerate(values))


def _rank_walk(values: Sequence[int]) -> int:
    # Terms C(v_i - 1, b - i) have both arguments decreasing, so each one is
    # reached from the previous by exact small-factor updates.  A zero term
    # means v_i = b - i and the rest of the sequence is forced.
    b = len(values)
    if b == 0 or values[0] - 1 < b:
        return 0
    y, s = values[0] - 1, b
    c = math.comb(y, s)
    total = c
    steps = 1
    for i in range(1, b):
        target = values[i] - 1
        c = c * s // (y - s + 1)  # C(y, s - 1)
        s -= 1
        if target < s:
            break
        while y > target:
            c = c * (y - s) // y
            y -= 1
            steps += 1
        total += c
        steps += 1
    _instrument.add("bigint", 2 * steps)
    return total


def df_unrank(
    space: DFSpace,
    m: int,
    table: BinomialTable | None = None,
    method: str = "auto",
) -> tuple[int, ...]:
    """The decreasing sequence of rank ``m`` in ``space``."""
    if not 0 <= m < space.size:
        raise RankOutOfRange(f"rank {m} outside [0, {space.size}) for DF({space.a}, {space.b})")
    if _use_walk(space, method):
        return _unrank_walk(space, m)
    binom = _table_for(space, table)
    out = []
    hi = space.a - 1  # largest admissible value of the next digit minus one
    for s in range(space.b, 0, -1):
        # largest y in [s-1, hi] with C(y, s) <= m; C(s-1, s) = 0 always fits
        lo = s - 1
        top = hi
        while lo < top:
            mid = (lo + top + 1) // 2
            if binom(mid, s) <= m:
                lo = mid
            else:
                top = mid - 1
        _instrument.add("bigint", 2 * max(1, (hi - s + 2).bit_length()))
        out.append(lo + 1)
        m -= binom(lo, s)
        hi = lo - 1
    return tuple(out)


def _unrank_walk(space: DFSpace, m: int) -> tuple[int, ...]:
    # Scan y downwards once, keeping c = C(y, s) up to date.
    out: list[int] = []
    y, s = space.a - 1, space.b
    c = math.comb(y, s) if y >= 0 else 0
    steps = 1
    while s > 0:
        if m == 0:
            out.extend(range(s, 0, -1))
            break
        while c > m:
            c = c * (y - s) // y
            y -= 1
            steps += 1
        out.append(y + 1)
        m -= c
        c = c * s // y  # C(y - 1, s - 1)
        y -= 1
        s -= 1
        steps += 1
    _instrument.add("bigint", 2 * steps)
    return tuple(out)
