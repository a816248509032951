# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse unit-pivot elimination.

Same pivot sequence as ``_elim_py.eliminate_units`` but on int64 entries.
Any overflow raises OverflowError so the caller can redo the matrix with
Python ints.
"""
from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.algorithm cimport sort as csort

ctypedef pair[int, int64_t] entry_t
ctypedef vector[entry_t] column_t

cdef extern from *:
    """
    static inline int wl_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int wl_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint wl_mul_ovf(long long a, long long b, long long *r) nogil
    bint wl_sub_ovf(long long a, long long b, long long *r) nogil


cdef inline Py_ssize_t find_row(const column_t& col, int r) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = <Py_ssize_t>col.size(), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if col[mid].first < r:
            lo = mid + 1
        else:
            hi = mid
    if lo < <Py_ssize_t>col.size() and col[lo].first == r:
        return lo
    return -1


cdef int axpy(column_t& colj, const column_t& colq, long long c, int j,
              vector[vector[int]]& rows, vector[int]& rowcount, column_t& scratch) except -1 nogil:
    # colj <- colj - c * colq, both sorted by row
    cdef size_t a = 0, b = 0
    cdef long long prod, val
    cdef int r
    scratch.clear()
    while a < colj.size() or b < colq.size():
        if b == colq.size() or (a < colj.size() and colj[a].first < colq[b].first):
            scratch.push_back(colj[a])
            a += 1
            continue
        if wl_mul_ovf(c, colq[b].second, &prod):
            with gil:
                raise OverflowError("int64 overflow in elimination")
        r = colq[b].first
        if a < colj.size() and colj[a].first == r:
            if wl_sub_ovf(colj[a].second, prod, &val):
                with gil:
                    raise OverflowError("int64 overflow in elimination")
            a += 1
            if val != 0:
                scratch.push_back(entry_t(r, val))
            else:
                rowcount[r] -= 1
        else:
            if wl_sub_ovf(0, prod, &val):
                with gil:
                    raise OverflowError("int64 overflow in elimination")
            scratch.push_back(entry_t(r, val))
            rows[r].push_back(j)
            rowcount[r] += 1
        b += 1
    colj.swap(scratch)
    return 0


def eliminate_units(int nrows, list cols):
    """See ``wedgelab.homology._elim_py.eliminate_units``."""
    cdef int ncols = len(cols)
    cdef vector[column_t] C
    cdef vector[vector[int]] rows
    cdef vector[int] rowcount
    cdef column_t scratch, colq
    cdef vector[pair[int, int]] order
    cdef int j, q, p, r, best, best_len, ln, units = 0
    cdef Py_ssize_t k, k2, pos
    cdef long long piv, c, v
    cdef bint progress = True
    cdef dict d

    C.resize(ncols)
    rows.resize(nrows)
    rowcount.resize(nrows, 0)
    for j in range(ncols):
        d = cols[j]
        for key, val in d.items():
            v = val
            if v != 0:
                C[j].push_back(entry_t(<int>key, v))
        csort(C[j].begin(), C[j].end())
        for k in range(<Py_ssize_t>C[j].size()):
            r = C[j][k].first
            rows[r].push_back(j)
            rowcount[r] += 1

    with nogil:
        while progress:
            progress = False
            order.clear()
            for j in range(ncols):
                if C[j].size():
                    order.push_back(pair[int, int](<int>C[j].size(), j))
            csort(order.begin(), order.end())
            for k in range(<Py_ssize_t>order.size()):
                q = order[k].second
                if C[q].size() == 0:
                    continue
                best = -1
                best_len = 0
                for pos in range(<Py_ssize_t>C[q].size()):
                    v = C[q][pos].second
                    if v == 1 or v == -1:
                        r = C[q][pos].first
                        ln = rowcount[r]
                        if best < 0 or ln < best_len or (ln == best_len and r < best):
                            best = r
                            best_len = ln
                if best < 0:
                    continue
                p = best
                colq = C[q]
                piv = colq[find_row(colq, p)].second
                for pos in range(<Py_ssize_t>rows[p].size()):
                    j = rows[p][pos]
                    if j == q:
                        continue
                    k2 = find_row(C[j], p)
                    if k2 < 0:
                        continue
                    if wl_mul_ovf(C[j][k2].second, piv, &c):
                        with gil:
                            raise OverflowError("int64 overflow in elimination")
                    axpy(C[j], colq, c, j, rows, rowcount, scratch)
                for pos in range(<Py_ssize_t>colq.size()):
                    rowcount[colq[pos].first] -= 1
                C[q].clear()
                rows[p].clear()
                units += 1
                progress = True

    rest = []
    for j in range(ncols):
        if C[j].size():
            d = {}
            for k in range(<Py_ssize_t>C[j].size()):
                d[C[j][k].first] = C[j][k].second
            rest.append(d)
    return units, rest
