"""Pure-Python sparse unit-pivot elimination (fallback for the compiled kernel)."""
from __future__ import annotations


def eliminate_units(nrows: int, cols: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Eliminate +-1 pivots with unimodular column operations.

    Each pivot at (p, q) clears row p from every other column and then drops
    row p and column q; it contributes one invariant factor equal to 1.
    Columns are visited sparsest first; inside a column the unit whose row is
    shortest wins, lowest row index on ties. Passes repeat until no unit
    pivot remains.

    Returns ``(unit_count, residual_columns)``. The residual columns hold no
    +-1 entry that could still serve as a pivot.
    """
    cols = [dict(c) for c in cols]
    rows: list[set[int]] = [set() for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i in col:
            rows[i].add(j)
    units = 0
    progress = True
    while progress:
        progress = False
        order = sorted((len(c), j) for j, c in enumerate(cols) if c)
        for _, q in order:
            colq = cols[q]
            if not colq:
                continue
            best = -1
            best_len = 0
            for r, v in colq.items():
                if v == 1 or v == -1:
                    ln = len(rows[r])
                    if best < 0 or ln < best_len or (ln == best_len and r < best):
                        best, best_len = r, ln
            if best < 0:
                continue
            p = best
            piv = colq[p]
            for j in list(rows[p]):
                if j == q:
                    continue
                colj = cols[j]
                c = colj[p] * piv
                for r, v in colq.items():
                    nv = colj.get(r, 0) - c * v
                    if nv:
                        if r not in colj:
                            rows[r].add(j)
                        colj[r] = nv
                    elif r in colj:
                        del colj[r]
                        rows[r].discard(j)
            for r in colq:
                rows[r].discard(q)
            cols[q] = {}
            units += 1
            progress = True
    return units, [c for c in cols if c]
