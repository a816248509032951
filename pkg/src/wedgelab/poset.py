"""Finite posets given by an element list and a ``leq`` predicate."""
from __future__ import annotations

from typing import Callable, Generic, Hashable, Sequence, TypeVar

from .simplicial import SimplicialComplex

__all__ = ["Poset", "order_complex"]

T = TypeVar("T", bound=Hashable)


class Poset(Generic[T]):
    """Elements in a fixed order plus a reflexive order relation.

    The relation is tabulated lazily as upper sets indexed by position.
    """

    def __init__(self, elements: Sequence[T], leq: Callable[[T, T], bool]):
        self.elements = list(elements)
        self._leq = leq
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("poset elements must be distinct")
        self._up: list[list[int]] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self._index

    def index(self, e: T) -> int:
        return self._index[e]

    def leq(self, a: T, b: T) -> bool:
        return self._leq(a, b)

    def strict_up(self) -> list[list[int]]:
        """For each element index, the sorted indices of elements strictly above it."""
        if self._up is None:
            els, leq = self.elements, self._leq
            self._up = [
                [j for j, b in enumerate(els) if j != i and leq(a, b)] for i, a in enumerate(els)
            ]
        return self._up

    def minimal(self) -> list[T]:
        up = self.strict_up()
        below = set(j for js in up for j in js)
        return [e for i, e in enumerate(self.elements) if i not in below]

    def maximal(self) -> list[T]:
        up = self.strict_up()
        return [e for i, e in enumerate(self.elements) if not up[i]]

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Cover relations as ``(lower_index, upper_index)`` pairs, sorted."""
        up_sets = [set(js) for js in self.strict_up()]
        edges = []
        for i, above in enumerate(up_sets):
            for j in above:
                if not any(j in up_sets[m] for m in above):
                    edges.append((i, j))
        return sorted(edges)


def order_complex(P: Poset) -> SimplicialComplex:
    """Simplicial complex of chains of P; element i becomes vertex i + 1."""
    up = P.strict_up()
    levels: list[list[tuple[int, ...]]] = []

    def extend(chain: tuple[int, ...], last: int) -> None:
        d = len(chain) - 1
        if d == len(levels):
            levels.append([])
        levels[d].append(chain)
        for j in up[last]:
            extend(chain + (j + 1,), j)

    for i in range(len(P)):
        extend((i + 1,), i)
    # chains along increasing indices are not guaranteed; sort vertex labels
    return SimplicialComplex(len(P), [[tuple(sorted(c)) for c in lev] for lev in levels])
