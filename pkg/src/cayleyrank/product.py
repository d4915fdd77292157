"""Mixed-radix ranks over an ordered product of finite spaces."""

from __future__ import annotations

from typing import Sequence

from cayleyrank import _instrument
from cayleyrank.dfcodec import RankOutOfRange


class ProductShape:
    """Ordered factor sizes ``L_1, ..., L_k`` with their suffix products.

    ``weights[j]`` is ``L_{j+1} * ... * L_k``, the value of one step in digit
    ``j``; ``total`` is the product of all sizes.
    """

    __slots__ = ("sizes", "weights", "total")

    def __init__(self, sizes: Sequence[int]):
        sizes = tuple(int(x) for x in sizes)
        if any(x < 1 for x in sizes):
            raise ValueError("every factor of a product shape needs at least one element")
        weights = [1] * len(sizes)
        acc = 1
        for j in range(len(sizes) - 1, -1, -1):
            weights[j] = acc
            acc *= sizes[j]
        self.sizes = sizes
        self.weights = tuple(weights)
        self.total = acc

    def __len__(self) -> int:
        return len(self.sizes)

    def __repr__(self) -> str:
        return f"ProductShape({list(self.sizes)})"


def product_rank(shape: ProductShape, digits: Sequence[int]) -> int:
    if len(digits) != len(shape):
        raise ValueError(f"expected {len(shape)} digits, got {len(digits)}")
    r = 0
    for j, (d, size, w) in enumerate(zip(digits, shape.sizes, shape.weights)):
        if not 0 <= d < size:
            raise RankOutOfRange(f"digit {j} = {d} outside [0, {size})")
        r += d * w
    _instrument.add("bigint", 2 * len(shape))
    return r


def product_unrank(shape: ProductShape, r: int) -> list[int]:
    if not 0 <= r < shape.total:
        raise RankOutOfRange(f"rank {r} outside [0, {shape.total})")
    digits = []
    for w in shape.weights:
        q, r = divmod(r, w)
        digits.append(q)
    _instrument.add("bigint", len(shape))
    return digits
