"""Abstract finite simplicial complexes on 1-based vertex labels.

A simplex is a strictly increasing tuple of positive ints. A complex keeps
every face explicitly, grouped by dimension and sorted lexicographically,
so enumeration order is deterministic.
"""
from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "make_simplex",
    "full_simplex",
    "complete_graph",
    "skeleton",
    "faces_of_dim",
    "from_facets",
    "read_facets",
]

Simplex = tuple[int, ...]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(vertices))
    if not s:
        raise ValueError("a simplex needs at least one vertex")
    if s[0] < 1:
        raise ValueError(f"vertex labels are 1-based, got {s[0]}")
    if any(a == b for a, b in zip(s, s[1:])):
        raise ValueError(f"repeated vertex in {s}")
    return s


class SimplicialComplex:
    """Downward-closed family of simplices on the vertex set [vertex_count]."""

    __slots__ = ("vertex_count", "_faces")

    def __init__(self, vertex_count: int, faces_by_dim: Sequence[Sequence[Simplex]]):
        self.vertex_count = vertex_count
        self._faces = tuple(tuple(sorted(level)) for level in faces_by_dim)
        while self._faces and not self._faces[-1]:
            self._faces = self._faces[:-1]

    @property
    def dim(self) -> int:
        return len(self._faces) - 1

    def faces(self, d: int) -> tuple[Simplex, ...]:
        if 0 <= d < len(self._faces):
            return self._faces[d]
        return ()

    def all_faces(self) -> Iterable[Simplex]:
        for level in self._faces:
            yield from level

    def f_vector(self) -> list[int]:
        return [len(level) for level in self._faces]

    def __len__(self) -> int:
        return sum(len(level) for level in self._faces)

    def __contains__(self, s) -> bool:
        s = tuple(s)
        return s in set(self.faces(len(s) - 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._faces == other._faces

    def __hash__(self) -> int:
        return hash((self.vertex_count, self._faces))

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertex_count={self.vertex_count}, f_vector={self.f_vector()})"

    def boundary_matrices(self) -> list["SparseIntMatrix"]:
        """Simplicial boundaries d_1..d_dim with the alternating-sign convention."""
        from .homology.sparse import SparseIntMatrix

        mats = []
        for d in range(1, len(self._faces)):
            index = {s: i for i, s in enumerate(self._faces[d - 1])}
            cols = [
                {index[s[:j] + s[j + 1:]]: (-1) ** j for j in range(len(s))} for s in self._faces[d]
            ]
            m = SparseIntMatrix(len(index), len(cols))
            m.cols = cols
            mats.append(m)
        return mats

    def check(self) -> None:
        """Raise ValueError unless the face family is closed under taking faces."""
        for d in range(1, len(self._faces)):
            below = set(self._faces[d - 1])
            for s in self._faces[d]:
                for j in range(len(s)):
                    if s[:j] + s[j + 1:] not in below:
                        raise ValueError(f"face {s[:j] + s[j + 1:]} of {s} missing")
        for s in self.all_faces():
            if s[-1] > self.vertex_count:
                raise ValueError(f"vertex {s[-1]} exceeds vertex_count {self.vertex_count}")


def from_facets(facets: Iterable[Iterable[int]], vertex_count: int | None = None) -> SimplicialComplex:
    """Downward closure of the given facets."""
    levels: dict[int, set[Simplex]] = {}
    top = 0
    for facet in facets:
        f = make_simplex(facet)
        top = max(top, f[-1])
        for r in range(1, len(f) + 1):
            levels.setdefault(r - 1, set()).update(combinations(f, r))
    if vertex_count is None:
        vertex_count = top
    elif top > vertex_count:
        raise ValueError(f"vertex {top} exceeds vertex_count {vertex_count}")
    dim = max(levels, default=-1)
    return SimplicialComplex(vertex_count, [levels[d] for d in range(dim + 1)])


def full_simplex(n: int) -> SimplicialComplex:
    """The n-simplex: every nonempty subset of [n+1]."""
    if n < 0:
        raise ValueError(f"simplex dimension must be non-negative, got {n}")
    verts = range(1, n + 2)
    return SimplicialComplex(n + 1, [list(combinations(verts, d + 1)) for d in range(n + 1)])


def skeleton(X: SimplicialComplex, d: int) -> SimplicialComplex:
    if d < 0:
        raise ValueError(f"skeleton dimension must be non-negative, got {d}")
    return SimplicialComplex(X.vertex_count, [X.faces(i) for i in range(min(d, X.dim) + 1)])


def complete_graph(m: int) -> SimplicialComplex:
    """K_m, the 1-skeleton of the (m-1)-simplex."""
    if m < 1:
        raise ValueError(f"complete graph needs at least one vertex, got {m}")
    return skeleton(full_simplex(m - 1), 1)


def faces_of_dim(X: SimplicialComplex, d: int) -> list[Simplex]:
    return list(X.faces(d))


def read_facets(path: str | Path) -> SimplicialComplex:
    """Parse one facet per line, vertices comma separated; '#' starts a comment."""
    facets = []
    text = Path(path).read_text()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            facets.append(make_simplex(int(tok) for tok in line.split(",")))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    return from_facets(facets)
