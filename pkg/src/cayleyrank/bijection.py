"""Function tables, rooted trees and the linear-time bijection between them.

A function table ``f`` maps ``{2, ..., n-1}`` into ``{1, ..., n}``.  Its
functional digraph splits into trees hanging off vertices 1 and n plus a set
of cycles.  ``theta`` cuts every cycle at its back edge (maximum element to
its image) and chains the cycles, ordered by decreasing maximum, into a
single path from n to 1.  The result is a tree with every edge directed
towards root 1, and ``1 + |f^-1(i)|`` is the degree of ``i`` in that tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class InvalidStructure(ValueError):
    """Raised when a function table or tree violates its invariants."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidStructure(f"vertex count must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class FunctionTable:
    """A total map ``{2, ..., n-1} -> {1, ..., n}``.

    ``targets[k]`` is the image of vertex ``k + 2``.
    """

    n: int
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        object.__setattr__(self, "targets", tuple(self.targets))
        if len(self.targets) != self.n - 2:
            raise InvalidStructure(
                f"table for n={self.n} needs {self.n - 2} entries, got {len(self.targets)}"
            )
        for i, t in enumerate(self.targets, start=2):
            if not 1 <= t <= self.n:
                raise InvalidStructure(f"f({i}) = {t} lies outside 1..{self.n}")

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> FunctionTable:
        if set(mapping) != set(range(2, n)):
            raise InvalidStructure(f"domain must be exactly 2..{n - 1}")
        return cls(n, tuple(mapping[i] for i in range(2, n)))

    @classmethod
    def _unchecked(cls, n: int, targets: tuple[int, ...]) -> FunctionTable:
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "targets", targets)
        return obj

    def __call__(self, i: int) -> int:
        if not 2 <= i <= self.n - 1:
            raise KeyError(i)
        return self.targets[i - 2]

    def as_dict(self) -> dict[int, int]:
        return {i: t for i, t in enumerate(self.targets, start=2)}


@dataclass(frozen=True)
class RootedTree:
    """A labeled tree on ``{1, ..., n}`` with all edges directed towards 1.

    ``parent[k]`` is the head of the edge leaving vertex ``k + 2``.
    """

    n: int
    parent: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        object.__setattr__(self, "parent", tuple(self.parent))
        n = self.n
        if len(self.parent) != n - 1:
            raise InvalidStructure(
                f"tree on n={n} vertices needs {n - 1} parent entries, got {len(self.parent)}"
            )
        for i, p in enumerate(self.parent, start=2):
            if not 1 <= p <= n:
                raise InvalidStructure(f"parent of {i} is {p}, outside 1..{n}")
            if p == i:
                raise InvalidStructure(f"vertex {i} is its own parent")
        # 0 = unvisited, 1 = on current walk, 2 = known to reach the root
        par = (0, 0) + self.parent
        state = bytearray(n + 1)
        state[1] = 2
        for start in range(2, n + 1):
            v = start
            while state[v] == 0:
                state[v] = 1
                v = par[v]
            if state[v] == 1:
                raise InvalidStructure(f"parent map has a cycle through vertex {v}")
            v = start
            while state[v] == 1:
                state[v] = 2
                v = par[v]

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> RootedTree:
        if set(mapping) != set(range(2, n + 1)):
            raise InvalidStructure(f"parent map must cover exactly 2..{n}")
        return cls(n, tuple(mapping[i] for i in range(2, n + 1)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> RootedTree:
        mapping: dict[int, int] = {}
        for child, head in edges:
            if child in mapping:
                raise InvalidStructure(f"vertex {child} has two outgoing edges")
            mapping[child] = head
        return cls.from_mapping(n, mapping)

    @classmethod
    def _unchecked(cls, n: int, parent: tuple[int, ...]) -> RootedTree:
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "parent", parent)
        return obj

    def parent_of(self, i: int) -> int:
        if not 2 <= i <= self.n:
            raise KeyError(i)
        return self.parent[i - 2]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, p) for i, p in enumerate(self.parent, start=2)]

    def as_dict(self) -> dict[int, int]:
        return dict(self.edges())


@dataclass(frozen=True)
class Cycle:
    left: int  # image of the maximum under f
    right: int  # maximum element of the cycle


def cycle_decomposition(f: FunctionTable) -> list[Cycle]:
    """Cycles of ``graph(f)`` ordered by decreasing maximum element."""
    n = f.n
    func = [0, 0, *f.targets]
    return _order_cycles(n, func, _cycle_representatives(n, func))


def _cycle_representatives(n: int, func: list[int]) -> list[int]:
    """One vertex on every cycle of the functional graph.

    Walks start at the smallest uncoloured domain element.  Uncoloured
    elements are kept in a doubly linked list (``prev``/``nxt``, -1 marks the
    ends) so the next start is always found in constant time.
    """
    last = n - 1
    colour = [0] * n
    prev = [-1] * n
    nxt = [-1] * n
    for i in range(2, n):
        prev[i] = i - 1 if i > 2 else -1
        nxt[i] = i + 1 if i < last else -1
    head = 2 if n > 2 else -1

    reps = []
    loop = 0
    while head != -1:
        loop += 1
        x = head
        while True:
            colour[x] = loop
            p, q = prev[x], nxt[x]
            if p != -1:
                nxt[p] = q
            else:
                head = q
            if q != -1:
                prev[q] = p
            x = func[x]
            if x == 1 or x == n:
                break
            c = colour[x]
            if c:
                if c == loop:
                    reps.append(x)
                break
    return reps


def _order_cycles(n: int, func: list[int], reps: list[int]) -> list[Cycle]:
    # maxima are distinct domain elements, so a bucket array over 0..n-1
    # sorts them in linear time
    bucket = [0] * n
    for t in reps:
        m = t
        x = func[t]
        while x != t:
            if x > m:
                m = x
            x = func[x]
        bucket[m] = 1
    return [Cycle(func[m], m) for m in range(n - 1, 1, -1) if bucket[m]]


def theta(f: FunctionTable) -> RootedTree:
    """Map a function table to the rooted tree it encodes."""
    n = f.n
    func = [0, 0, *f.targets]
    cycles = _order_cycles(n, func, _cycle_representatives(n, func))
    func.append(0)  # slot for vertex n
    if not cycles:
        func[n] = 1
    else:
        func[n] = cycles[0].left
        for here, following in zip(cycles, cycles[1:]):
            func[here.right] = following.left
        func[cycles[-1].right] = 1
    return RootedTree._unchecked(n, tuple(func[2:]))


def root_path(t: RootedTree) -> list[int]:
    """Vertices on the path from n to 1, both ends included."""
    par = (0, 0) + t.parent
    path = [t.n]
    v = t.n
    while v != 1:
        v = par[v]
        path.append(v)
    return path


def theta_inverse(t: RootedTree) -> FunctionTable:
    """Recover the function table of a rooted tree."""
    n = t.n
    func = [0, 0, *t.parent]
    path = root_path(t)
    # interior vertices; the segment maxima are their right-to-left maxima
    interior = path[1:-1]
    start = len(interior)
    best = 0
    for k in range(len(interior) - 1, -1, -1):
        v = interior[k]
        if v > best:
            best = v
            # segment interior[k+1:start] ends at the previous maximum
            if start < len(interior):
                func[interior[start]] = interior[k + 1]
            start = k
    if interior:
        # the first segment runs from interior[0] to interior[start]
        func[interior[start]] = interior[0]
    del func[n]
    return FunctionTable._unchecked(n, tuple(func[2:]))


def degrees_of(t: RootedTree) -> list[int]:
    """Undirected degrees ``<deg(1), ..., deg(n)>``."""
    deg = [1] * (t.n + 1)
    deg[1] = 0
    for p in t.parent:
        deg[p] += 1
    return deg[1:]


def preimage_sizes(f: FunctionTable) -> list[int]:
    sizes = [0] * (f.n + 1)
    for target in f.targets:
        sizes[target] += 1
    return sizes[1:]


def preimage_partition(f: FunctionTable) -> list[frozenset[int]]:
    """``<f^-1(1), ..., f^-1(n)>`` as a list of n sets."""
    blocks: list[list[int]] = [[] for _ in range(f.n + 1)]
    for i, target in enumerate(f.targets, start=2):
        blocks[target].append(i)
    return [frozenset(b) for b in blocks[1:]]


def table_from_preimages(n: int, blocks: Sequence[Iterable[int]]) -> FunctionTable:
    """Inverse of ``preimage_partition``."""
    if len(blocks) != n:
        raise InvalidStructure(f"need {n} preimage sets, got {len(blocks)}")
    targets = [0] * (n + 1)
    for label, block in enumerate(blocks, start=1):
        for i in block:
            if not 2 <= i <= n - 1 or targets[i]:
                raise InvalidStructure(f"preimage sets do not partition 2..{n - 1}")
            targets[i] = label
    if any(targets[i] == 0 for i in range(2, n)):
        raise InvalidStructure(f"preimage sets do not partition 2..{n - 1}")
    return FunctionTable._unchecked(n, tuple(targets[2:n]))
