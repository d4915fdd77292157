"""Brute-force reference implementations for small n (testing only).

Nothing here shares code with the fast paths beyond the plain data types:
cycles are found by repeated iteration, blocks are ordered with ``sorted``
and relative ranks come from ``list.index``.
"""

from __future__ import annotations

import functools
import itertools
from collections import defaultdict

from cayleyrank.bijection import FunctionTable, RootedTree
from cayleyrank.treerank import DegreeMultiset, DegreeSequence, DegreeSpec

MAX_N = 8


class OracleTooLarge(ValueError):
    pass


def _guard(n: int) -> None:
    if not 2 <= n <= MAX_N:
        raise OracleTooLarge(f"oracle only handles 2 <= n <= {MAX_N}, got {n}")


def enumerate_functions(n: int) -> list[FunctionTable]:
    _guard(n)
    return [FunctionTable(n, targets) for targets in itertools.product(range(1, n + 1), repeat=n - 2)]


def naive_theta(f: FunctionTable) -> RootedTree:
    n = f.n
    g = f.as_dict()
    on_cycle = set()
    for v in g:
        x = g[v]
        for _ in range(n):
            if x == v:
                on_cycle.add(v)
                break
            if x not in g:
                break
            x = g[x]
    maxima = set()
    for v in on_cycle:
        members = [v]
        x = g[v]
        while x != v:
            members.append(x)
            x = g[x]
        maxima.add(max(members))
    order = sorted(maxima, reverse=True)
    parent = dict(g)
    lefts = [g[m] for m in order]
    if not order:
        parent[n] = 1
    else:
        parent[n] = lefts[0]
        for k, m in enumerate(order):
            parent[m] = lefts[k + 1] if k + 1 < len(order) else 1
    return RootedTree.from_mapping(n, parent)


def _preimages(f: FunctionTable) -> dict[int, list[int]]:
    pre: dict[int, list[int]] = {v: [] for v in range(1, f.n + 1)}
    for i, t in f.as_dict().items():
        pre[t].append(i)
    return pre


def _encode(ground: list[int], blocks: list[list[int]]) -> tuple[int, ...]:
    residual = list(ground)
    out = []
    for block in blocks:
        for x in sorted(block, reverse=True):
            out.append(residual.index(x) + 1)
        for x in block:
            residual.remove(x)
    return tuple(out)


def sequence_key(f: FunctionTable) -> tuple[int, ...]:
    """Concatenated relative-rank code of ``f`` within its degree-sequence class."""
    pre = _preimages(f)
    labels = sorted((v for v in pre if pre[v]), key=lambda v: (len(pre[v]), v))
    return _encode(list(range(2, f.n)), [pre[v] for v in labels])


def multiset_key(f: FunctionTable) -> tuple[int, ...]:
    """Degree-placement code followed by ``sequence_key``."""
    pre = _preimages(f)
    by_size: dict[int, list[int]] = defaultdict(list)
    for v in pre:
        by_size[len(pre[v])].append(v)
    sizes = sorted(by_size, key=lambda k: (len(by_size[k]), k))
    return _encode(list(range(1, f.n + 1)), [by_size[k] for k in sizes]) + sequence_key(f)


@functools.lru_cache(maxsize=None)
def _classes(n: int) -> tuple[dict, dict]:
    seq: dict[tuple[int, ...], list] = defaultdict(list)
    mult: dict[tuple[int, ...], list] = defaultdict(list)
    for f in enumerate_functions(n):
        pre = _preimages(f)
        degrees = tuple(1 + len(pre[v]) for v in range(1, n + 1))
        tree = naive_theta(f)
        seq[degrees].append((sequence_key(f), tree))
        mult[tuple(sorted(degrees))].append((multiset_key(f), tree))
    seq_sorted = {k: [t for _, t in sorted(v, key=lambda kv: kv[0])] for k, v in seq.items()}
    mult_sorted = {
        DegreeMultiset.of_degrees(k): [t for _, t in sorted(v, key=lambda kv: kv[0])]
        for k, v in mult.items()
    }
    return seq_sorted, mult_sorted


def enumerate_class(d: DegreeSpec) -> list[RootedTree]:
    """All trees of a class, listed in rank order."""
    _guard(d.n)
    seq, mult = _classes(d.n)
    if isinstance(d, DegreeSequence):
        return list(seq.get(d.degrees, []))
    return list(mult.get(d, []))


def all_sequences(n: int) -> list[DegreeSequence]:
    """Every valid degree sequence on n vertices (compositions of n-2 into n parts)."""
    _guard(n)
    out = []
    for bars in itertools.combinations(range(2 * n - 3), n - 1):
        cuts = (-1, *bars, 2 * n - 3)
        out.append(DegreeSequence(tuple(1 + b - a - 1 for a, b in zip(cuts, cuts[1:]))))
    return out


def all_multisets(n: int) -> list[DegreeMultiset]:
    _guard(n)
    found = {tuple(sorted(d.degrees)) for d in all_sequences(n)}
    return [DegreeMultiset.of_degrees(k) for k in sorted(found)]
