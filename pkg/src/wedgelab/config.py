"""Discretized configuration complexes D_k(X) and their unordered quotients.

A cell is an ordered k-tuple of pairwise vertex-disjoint simplices of X,
read as the product cell s_1 x ... x s_k. Orientation: each simplex is
oriented by its increasing vertex order and products use the usual sign
rule

    d(s_1 x ... x s_k) = sum_i (-1)^(|s_1| + ... + |s_{i-1}|) s_1 x ... x d s_i x ... x s_k

with d s = sum_j (-1)^j (s without its j-th vertex).

The symmetric group acts freely by permuting factors. The unordered complex
keeps the lexicographically least tuple of each orbit (the tuple with its
parts sorted); a permuted boundary term is folded back onto its
representative with the Koszul sign (-1)^(ab) for every pair of factors of
dimensions a, b whose order is swapped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .homology.sparse import SparseIntMatrix
from .poset import Poset
from .simplicial import Simplex, SimplicialComplex

__all__ = [
    "ConfigCell",
    "ConfigComplex",
    "build_ordered",
    "build_unordered",
    "boundary_matrices",
    "f_vector",
    "count_f_vector",
    "face_poset",
    "cell_dim",
]

ConfigCell = tuple[Simplex, ...]


def cell_dim(cell: ConfigCell) -> int:
    return sum(len(s) for s in cell) - len(cell)


def _mask(s: Simplex) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def _face_table(X: SimplicialComplex) -> tuple[dict[int, tuple[int, Simplex]], int]:
    """mask -> (rank in sorted face order, face), plus the mask of all vertices."""
    faces = sorted(X.all_faces())
    table = {_mask(s): (i, s) for i, s in enumerate(faces)}
    full = 0
    for m in table:
        full |= m
    return table, full


def _enumerate_tuples(X: SimplicialComplex, k: int, increasing: bool) -> Iterator[ConfigCell]:
    table, full = _face_table(X)

    def rec(prefix: tuple[Simplex, ...], free: int, last: int) -> Iterator[ConfigCell]:
        left = k - len(prefix)
        if left == 0:
            yield prefix
            return
        # walk nonempty submasks of the free vertices; every later slot needs a vertex
        sub = free
        while sub:
            hit = table.get(sub)
            if hit is not None and (free & ~sub).bit_count() >= left - 1:
                rank, face = hit
                if not increasing or rank > last:
                    yield from rec(prefix + (face,), free & ~sub, rank)
            sub = (sub - 1) & free

    yield from rec((), full, -1)


def count_f_vector(X: SimplicialComplex, k: int, ordered: bool = True) -> list[int]:
    """f-vector of D_k(X) (or UD_k(X)) counted without materializing cells."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    table, full = _face_table(X)
    dims = {m: len(s) - 1 for m, (_, s) in table.items()}

    @lru_cache(maxsize=None)
    def count(free: int, left: int) -> tuple[int, ...]:
        # number of ordered tuples of `left` disjoint faces inside `free`, by total dimension
        if left == 0:
            return (1,)
        if free.bit_count() < left:
            return ()
        acc: list[int] = []
        sub = free
        while sub:
            d = dims.get(sub)
            if d is not None:
                for i, c in enumerate(count(free & ~sub, left - 1)):
                    j = i + d
                    if j >= len(acc):
                        acc.extend([0] * (j + 1 - len(acc)))
                    acc[j] += c
            sub = (sub - 1) & free
        return tuple(acc)

    fv = list(count(full, k))
    while fv and not fv[-1]:
        fv.pop()
    if not ordered:
        fv = [c // factorial(k) for c in fv]
    return fv


@dataclass(frozen=True, eq=False)
class ConfigComplex:
    """Cell structure of D_k(X) (``ordered=True``) or UD_k(X)."""

    k: int
    ambient: SimplicialComplex
    cells_by_dim: tuple[tuple[ConfigCell, ...], ...]
    ordered: bool = True
    _index: list[dict[ConfigCell, int]] = field(init=False, repr=False)
    _bd: list = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", [{c: i for i, c in enumerate(lev)} for lev in self.cells_by_dim])
        object.__setattr__(self, "_bd", [])

    @property
    def dim(self) -> int:
        return len(self.cells_by_dim) - 1

    def f_vector(self) -> list[int]:
        return [len(lev) for lev in self.cells_by_dim]

    def euler(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def cells(self, d: int) -> tuple[ConfigCell, ...]:
        if 0 <= d < len(self.cells_by_dim):
            return self.cells_by_dim[d]
        return ()

    def all_cells(self) -> Iterator[ConfigCell]:
        for lev in self.cells_by_dim:
            yield from lev

    def index(self, cell: ConfigCell) -> int:
        return self._index[cell_dim(cell)][cell]

    def facets(self, cell: ConfigCell) -> list[ConfigCell]:
        """Codimension-one faces of ``cell`` (orbit representatives if unordered)."""
        out = []
        for i, s in enumerate(cell):
            if len(s) > 1:
                for j in range(len(s)):
                    face = cell[:i] + (s[:j] + s[j + 1:],) + cell[i + 1:]
                    out.append(face if self.ordered else _canonical(face)[0])
        return out

    def closures(self) -> dict[ConfigCell, frozenset[ConfigCell]]:
        """Every cell mapped to the set of cells in its closure (itself included)."""
        clo: dict[ConfigCell, frozenset[ConfigCell]] = {}
        for lev in self.cells_by_dim:
            for c in lev:
                acc = {c}
                for f in self.facets(c):
                    acc |= clo[f]
                clo[c] = frozenset(acc)
        return clo

    def boundary(self, cell: ConfigCell) -> dict[ConfigCell, int]:
        """Boundary of one cell as ``{cell: coefficient}`` in this complex's basis."""
        out: dict[ConfigCell, int] = {}
        offset = 0
        for i, s in enumerate(cell):
            if len(s) > 1:
                lead = -1 if offset % 2 else 1
                for j in range(len(s)):
                    face = cell[:i] + (s[:j] + s[j + 1:],) + cell[i + 1:]
                    sign = -lead if j % 2 else lead
                    if not self.ordered:
                        face, twist = _canonical(face)
                        sign *= twist
                    c = out.get(face, 0) + sign
                    if c:
                        out[face] = c
                    else:
                        del out[face]
            offset += len(s) - 1
        return out

    def boundary_matrices(self) -> list[SparseIntMatrix]:
        """``[d_1, ..., d_dim]``; d_d has shape (f_{d-1}, f_d)."""
        if not self._bd:
            mats = []
            for d in range(1, len(self.cells_by_dim)):
                rows = self._index[d - 1]
                cols = [{rows[f]: v for f, v in self.boundary(c).items()} for c in self.cells_by_dim[d]]
                m = SparseIntMatrix(len(rows), len(cols))
                m.cols = cols
                mats.append(m)
            self._bd.extend(mats)
        return list(self._bd)


def _canonical(cell: ConfigCell) -> tuple[ConfigCell, int]:
    """Orbit representative of ``cell`` and the Koszul sign relating the two."""
    dims = [len(s) - 1 for s in cell]
    parity = 0
    n = len(cell)
    for a in range(n):
        if dims[a] % 2:
            for b in range(a + 1, n):
                if dims[b] % 2 and cell[b] < cell[a]:
                    parity ^= 1
    return tuple(sorted(cell)), (-1 if parity else 1)


def _assemble(X: SimplicialComplex, k: int, ordered: bool) -> ConfigComplex:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    levels: dict[int, list[ConfigCell]] = {}
    for cell in _enumerate_tuples(X, k, increasing=not ordered):
        levels.setdefault(cell_dim(cell), []).append(cell)
    top = max(levels, default=-1)
    cells = tuple(tuple(sorted(levels.get(d, ()))) for d in range(top + 1))
    return ConfigComplex(k, X, cells, ordered)


def build_ordered(X: SimplicialComplex, k: int) -> ConfigComplex:
    """D_k(X): every ordered k-tuple of pairwise disjoint faces of X."""
    return _assemble(X, k, ordered=True)


def build_unordered(X: SimplicialComplex, k: int) -> ConfigComplex:
    """UD_k(X): one cell per S_k-orbit, the tuple with sorted parts."""
    return _assemble(X, k, ordered=False)


def boundary_matrices(C: ConfigComplex) -> list[SparseIntMatrix]:
    return C.boundary_matrices()


def f_vector(C: ConfigComplex) -> list[int]:
    return C.f_vector()


def _cell_leq(a: ConfigCell, b: ConfigCell) -> bool:
    return all(set(s) <= set(t) for s, t in zip(a, b))


def face_poset(C: ConfigComplex) -> Poset[ConfigCell]:
    """Cells of an ordered complex under factor-wise face inclusion."""
    if not C.ordered:
        raise ValueError("face_poset is defined for ordered complexes only")
    return Poset(list(C.all_cells()), _cell_leq)


def corrupt(C: ConfigComplex, d: int = 1) -> ConfigComplex:
    """Copy of C with one boundary sign flipped in d_d (a negative-test hook)."""
    mats = [m.copy() for m in C.boundary_matrices()]
    if not 1 <= d <= len(mats):
        raise ValueError(f"no boundary matrix in degree {d}")
    m = mats[d - 1]
    for col in m.cols:
        if col:
            r = min(col)
            col[r] = -col[r]
            break
    bad = ConfigComplex(C.k, C.ambient, C.cells_by_dim, C.ordered)
    bad._bd.extend(mats)
    return bad
