"""Integer homology of finite chain complexes via Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .snf import backend, dense_smith_invariants, smith_invariants
from .sparse import SparseIntMatrix

__all__ = [
    "SparseIntMatrix",
    "HomologyResult",
    "DegreeHomology",
    "MalformedComplexError",
    "smith_invariants",
    "dense_smith_invariants",
    "chain_homology",
    "check_chain_complex",
    "backend",
    "complex_homology",
]


class MalformedComplexError(ValueError):
    """Boundary matrices with mismatched shapes or a nonzero composite."""


@dataclass(frozen=True)
class DegreeHomology:
    d: int
    rank: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class HomologyResult:
    degrees: tuple[DegreeHomology, ...] = field(default_factory=tuple)

    def __getitem__(self, d: int) -> DegreeHomology:
        for h in self.degrees:
            if h.d == d:
                return h
        return DegreeHomology(d, 0)

    def ranks(self) -> list[int]:
        return [h.rank for h in self.degrees]

    def torsion(self) -> dict[int, tuple[int, ...]]:
        return {h.d: h.torsion for h in self.degrees if h.torsion}

    def to_json(self) -> dict:
        # integers as decimal strings so big values survive any JSON consumer
        return {
            "degrees": [
                {"d": str(h.d), "rank": str(h.rank), "torsion": [str(t) for t in h.torsion]}
                for h in self.degrees
            ]
        }

    def __str__(self) -> str:
        return ", ".join(f"H{h.d}={h}" for h in self.degrees)


def check_chain_complex(boundaries: Sequence[SparseIntMatrix], f_vector: Sequence[int]) -> None:
    """Raise MalformedComplexError unless shapes line up and d o d = 0."""
    if len(boundaries) != max(len(f_vector) - 1, 0):
        raise MalformedComplexError(
            f"{len(boundaries)} boundary matrices for f-vector of length {len(f_vector)}"
        )
    for d, m in enumerate(boundaries, 1):
        if m.shape != (f_vector[d - 1], f_vector[d]):
            raise MalformedComplexError(
                f"boundary d_{d} has shape {m.shape}, expected ({f_vector[d - 1]}, {f_vector[d]})"
            )
    for d in range(1, len(boundaries)):
        if not (boundaries[d - 1] @ boundaries[d]).is_zero():
            raise MalformedComplexError(f"d_{d} o d_{d + 1} is not zero")


def chain_homology(
    boundaries: Sequence[SparseIntMatrix],
    f_vector: Sequence[int],
    degrees: Iterable[int] | None = None,
    *,
    check: bool = True,
) -> HomologyResult:
    """Homology of the complex with ``boundaries[d-1]`` = d_d : C_d -> C_{d-1}.

    ``degrees`` restricts the computation; only the boundary matrices
    adjacent to the requested degrees are reduced.
    """
    if check:
        check_chain_complex(boundaries, f_vector)
    top = len(f_vector) - 1
    wanted = range(top + 1) if degrees is None else sorted(set(d for d in degrees if 0 <= d <= top))
    inv: dict[int, list[int]] = {}

    def invariants(d: int) -> list[int]:
        if d < 1 or d > top:
            return []
        if d not in inv:
            inv[d] = smith_invariants(boundaries[d - 1])
        return inv[d]

    out = []
    for d in wanted:
        rank = f_vector[d] - len(invariants(d)) - len(invariants(d + 1))
        torsion = tuple(t for t in invariants(d + 1) if t > 1)
        out.append(DegreeHomology(d, rank, torsion))
    return HomologyResult(tuple(out))


def complex_homology(C, degrees: Iterable[int] | None = None, *, check: bool = True) -> HomologyResult:
    """Homology of anything exposing ``boundary_matrices()`` and ``f_vector()``."""
    return chain_homology(C.boundary_matrices(), C.f_vector(), degrees, check=check)

