"""Ordered partial partitions of [n] with exactly k parts.

Parts are stored as bitmasks (bit v set means v is in the part), so
disjointness and inclusion are single bitwise operations.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .config import ConfigCell, build_ordered
from .poset import Poset, order_complex
from .simplicial import full_simplex

__all__ = [
    "OrderedPartialPartition",
    "PartitionPoset",
    "NotAnIsomorphism",
    "build_poset",
    "meet",
    "join",
    "order_complex",
    "face_poset_isomorphism",
    "hasse_json",
]


def _to_mask(part: Iterable[int]) -> int:
    m = 0
    for v in part:
        m |= 1 << v
    return m


def _from_mask(m: int) -> frozenset[int]:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class OrderedPartialPartition:
    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for m in self.masks:
            if m <= 0:
                raise ValueError("parts must be nonempty")
            if m & seen:
                raise ValueError("parts must be pairwise disjoint")
            if m >> (self.n + 1) or m & 1:
                raise ValueError(f"part outside [1, {self.n}]")
            seen |= m

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]], n: int) -> OrderedPartialPartition:
        return cls(n, tuple(_to_mask(p) for p in parts))

    @property
    def k(self) -> int:
        return len(self.masks)

    @property
    def parts(self) -> tuple[frozenset[int], ...]:
        return tuple(_from_mask(m) for m in self.masks)

    @property
    def support(self) -> int:
        """Number of elements of [n] used by the parts."""
        return sum(bin(m).count("1") for m in self.masks)

    @property
    def dim(self) -> int:
        return self.support - self.k

    def __le__(self, other: OrderedPartialPartition) -> bool:
        return all(a & ~b == 0 for a, b in zip(self.masks, other.masks))

    def __lt__(self, other: OrderedPartialPartition) -> bool:
        return self != other and self <= other

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in self.parts)
        return f"({body})"


def _leq(a: OrderedPartialPartition, b: OrderedPartialPartition) -> bool:
    return all(x & ~y == 0 for x, y in zip(a.masks, b.masks))


class PartitionPoset(Poset[OrderedPartialPartition]):
    """The poset of ordered partial partitions of [n] with exactly k parts."""

    def __init__(self, n: int, k: int, elements: list[OrderedPartialPartition]):
        super().__init__(elements, _leq)
        self.n = n
        self.k = k


def build_poset(n: int, k: int) -> PartitionPoset:
    """All ordered partial partitions of [n] into k parts, sorted by (dim, masks)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    els = []
    # assign each element of [n] to a part (1..k) or leave it out (0)
    for labels in product(range(k + 1), repeat=n):
        masks = [0] * k
        for v, lab in enumerate(labels, 1):
            if lab:
                masks[lab - 1] |= 1 << v
        if all(masks):
            els.append(OrderedPartialPartition(n, tuple(masks)))
    els.sort(key=lambda p: (p.dim, p.masks))
    return PartitionPoset(n, k, els)


def meet(a: OrderedPartialPartition, b: OrderedPartialPartition) -> Optional[OrderedPartialPartition]:
    """Componentwise intersection, or None when some intersection is empty."""
    _same_shape(a, b)
    masks = tuple(x & y for x, y in zip(a.masks, b.masks))
    if not all(masks):
        return None
    return OrderedPartialPartition(a.n, masks)


def join(a: OrderedPartialPartition, b: OrderedPartialPartition) -> Optional[OrderedPartialPartition]:
    """Componentwise union, or None when the unions overlap."""
    _same_shape(a, b)
    masks = tuple(x | y for x, y in zip(a.masks, b.masks))
    seen = 0
    for m in masks:
        if m & seen:
            return None
        seen |= m
    return OrderedPartialPartition(a.n, masks)


def _same_shape(a: OrderedPartialPartition, b: OrderedPartialPartition) -> None:
    if a.n != b.n or a.k != b.k:
        raise ValueError(f"incompatible partitions: n={a.n},k={a.k} vs n={b.n},k={b.k}")


class NotAnIsomorphism(AssertionError):
    """The cell-to-partition map failed to be an order isomorphism."""


def cell_to_partition(cell: ConfigCell, n: int) -> OrderedPartialPartition:
    return OrderedPartialPartition(n, tuple(_to_mask(s) for s in cell))


def face_poset_isomorphism(n: int, k: int) -> dict[ConfigCell, OrderedPartialPartition]:
    """Map cells of D_k(Delta^(n-1)) to their vertex-set partitions, verified.

    Raises NotAnIsomorphism unless the map is a bijection onto the poset that
    preserves and reflects the order; the cellular closure relation and the poset order are compared
    pair by pair.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    C = build_ordered(full_simplex(n - 1), k)
    P = build_poset(n, k)
    cells = list(C.all_cells())
    phi = {c: cell_to_partition(c, n) for c in cells}
    image = set(phi.values())
    if len(image) != len(cells) or image != set(P.elements):
        raise NotAnIsomorphism(
            f"D_{k}(Delta^{n - 1}) has {len(cells)} cells, poset has {len(P)} elements, "
            f"{len(image)} distinct images"
        )
    closure = C.closures()
    for a in cells:
        pa = phi[a]
        for b in cells:
            if (a in closure[b]) != P.leq(pa, phi[b]):
                raise NotAnIsomorphism(f"order mismatch between {a} and {b}")
    return phi


def hasse_json(P: Poset) -> str:
    """Hasse diagram as a JSON array of ``[lower_index, upper_index]`` pairs."""
    return json.dumps([list(e) for e in P.hasse_edges()], separators=(",", ":"))

