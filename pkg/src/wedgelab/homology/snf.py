"""Smith normal form invariants of integer matrices.

Large sparse matrices first lose all their +-1 pivots through sparse
elimination (compiled kernel when available, pure Python otherwise); the
small residual block then goes through a dense exact SNF.
"""
from __future__ import annotations

import logging
import os

from . import _elim_py
from .sparse import SparseIntMatrix

log = logging.getLogger(__name__)

try:
    from . import _elim as _elim_c
except ImportError:  # extension not built
    _elim_c = None

__all__ = ["smith_invariants", "dense_smith_invariants", "backend", "DENSE_LIMIT"]

DENSE_LIMIT = 64


def backend() -> str:
    """Name of the elimination kernel in use: ``"cython"`` or ``"python"``."""
    if _elim_c is not None and os.environ.get("WEDGELAB_PURE_PYTHON", "") in ("", "0"):
        return "cython"
    return "python"


def dense_smith_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero SNF diagonal d_1 | d_2 | ... of a dense integer matrix.

    Pivot: smallest nonzero absolute value, lowest (row, col) on ties.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            ai = a[i]
            for j in range(t, n):
                v = ai[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for r in a:
                r[t], r[j] = r[j], r[t]
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = a[i][t]
                if v:
                    q = v // piv
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, n):
                v = rt[j]
                if v:
                    q = v // piv
                    if q:
                        for r in a[t:]:
                            r[j] -= q * r[t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                bad = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv), None
                )
                if bad is None:
                    break
                rb = a[bad]
                for j in range(t, n):
                    a[t][j] += rb[j]
                dirty = True
            # move the smallest entry of row t / column t onto the diagonal
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        out.append(abs(a[t][t]))
        t += 1
    return out


def _residual_dense(nrows: int, cols: list[dict[int, int]]) -> list[list[int]]:
    used = sorted({i for c in cols for i in c})
    pos = {r: k for k, r in enumerate(used)}
    dense = [[0] * len(cols) for _ in used]
    for j, c in enumerate(cols):
        for i, v in c.items():
            dense[pos[i]][j] = v
    return dense


def eliminate_units(nrows: int, cols: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Dispatch sparse unit elimination to the active kernel."""
    if backend() == "cython":
        try:
            return _elim_c.eliminate_units(nrows, cols)
        except OverflowError:
            log.info("int64 overflow in compiled kernel, redoing with Python ints")
    return _elim_py.eliminate_units(nrows, cols)


def smith_invariants(M: SparseIntMatrix, *, dense_limit: int = DENSE_LIMIT) -> list[int]:
    """Positive SNF invariants of M in divisibility order (zero matrix gives [])."""
    if M.nrows < dense_limit and M.ncols < dense_limit:
        return dense_smith_invariants(M.to_dense())
    units, rest = eliminate_units(M.nrows, M.cols)
    tail = dense_smith_invariants(_residual_dense(M.nrows, rest)) if rest else []
    return [1] * units + tail
