from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = ["SparseIntMatrix"]


class SparseIntMatrix:
    """Integer matrix stored column-wise as ``{row: value}`` dicts.

    Zero entries are never stored. Values are Python ints.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[dict[int, int]] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError(f"negative shape ({nrows}, {ncols})")
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            self.cols = [{} for _ in range(ncols)]
        else:
            if len(cols) != ncols:
                raise ValueError(f"expected {ncols} columns, got {len(cols)}")
            self.cols = []
            for j, col in enumerate(cols):
                clean = {}
                for i, v in col.items():
                    if not 0 <= i < nrows:
                        raise IndexError(f"row {i} out of range in column {j}")
                    if v:
                        clean[i] = int(v)
                self.cols.append(clean)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, int]]) -> SparseIntMatrix:
        """Build from ``(row, col, value)`` triples; repeated coordinates are summed."""
        cols: list[dict[int, int]] = [{} for _ in range(ncols)]
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside shape ({nrows}, {ncols})")
            col = cols[j]
            s = col.get(i, 0) + v
            if s:
                col[i] = s
            else:
                col.pop(i, None)
        m = cls(nrows, ncols)
        m.cols = cols
        return m

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> SparseIntMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        return cls.from_entries(
            nrows, ncols, ((i, j, v) for i, r in enumerate(rows) for j, v in enumerate(r) if v)
        )

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero ``(row, col, value)`` triples in column-major order."""
        for j, col in enumerate(self.cols):
            for i in sorted(col):
                yield i, j, col[i]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cols[j].get(i, 0)

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for col in other.cols:
            acc: dict[int, int] = {}
            for k, b in col.items():
                for i, a in self.cols[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            out.append({i: v for i, v in acc.items() if v})
        m = SparseIntMatrix(self.nrows, other.ncols)
        m.cols = out
        return m

    def is_zero(self) -> bool:
        return not any(self.cols)

    def transpose(self) -> SparseIntMatrix:
        return SparseIntMatrix.from_entries(self.ncols, self.nrows, ((j, i, v) for i, j, v in self.entries()))

    def copy(self) -> SparseIntMatrix:
        m = SparseIntMatrix(self.nrows, self.ncols)
        m.cols = [dict(c) for c in self.cols]
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"
