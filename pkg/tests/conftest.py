import itertools
import sys
from math import gcd

import pytest

from wedgelab.homology import snf


@pytest.fixture(params=["python", "cython"])
def kernel(request, monkeypatch):
    """Run a test once per elimination kernel."""
    if request.param == "cython":
        if snf._elim_c is None:
            pytest.skip("compiled kernel not built")
        monkeypatch.delenv("WEDGELAB_PURE_PYTHON", raising=False)
    else:
        monkeypatch.setenv("WEDGELAB_PURE_PYTHON", "1")
    assert snf.backend() == request.param
    return request.param


# ---- brute-force oracles shared by several test modules ----


def set_partitions(elements):
    """All partitions of a list into unordered nonempty blocks."""
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def bareiss_det(m):
    """Exact determinant by fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def determinantal_invariants(m):
    """SNF invariants as ratios of gcds of all r x r minors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out, prev = [], 1
    for r in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), r):
            for ci in itertools.combinations(range(cols), r):
                g = gcd(g, bareiss_det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def rational_rank(m):
    from fractions import Fraction

    a = [[Fraction(v) for v in r] for r in m]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def disjoint_tuples(faces, k):
    """Every ordered k-tuple of pairwise vertex-disjoint faces, by brute force."""
    out = []
    for combo in itertools.product(faces, repeat=k):
        verts = [v for s in combo for v in s]
        if len(verts) == len(set(verts)):
            out.append(combo)
    return out


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = config.stash.get(mod.ACCEPTANCE_KEY, []) if mod else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
