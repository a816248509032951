import itertools
from math import factorial

import pytest

from wedgelab.combinatorics import binomial, stirling2
from wedgelab.config import build_ordered, build_unordered, cell_dim, corrupt, count_f_vector, face_poset
from wedgelab.homology import MalformedComplexError, complex_homology
from wedgelab.simplicial import complete_graph, full_simplex, skeleton

from conftest import disjoint_tuples


def brute_f_vector(X, k):
    counts = {}
    for t in disjoint_tuples(list(X.all_faces()), k):
        d = sum(len(s) - 1 for s in t)
        counts[d] = counts.get(d, 0) + 1
    return [counts.get(d, 0) for d in range(max(counts, default=-1) + 1)]


def test_hexagon():
    C = build_ordered(full_simplex(2), 2)
    assert C.f_vector() == [6, 6] == brute_f_vector(full_simplex(2), 2)
    assert C.euler() == 0


def test_cuboctahedron_counts():
    C = build_ordered(full_simplex(3), 2)
    assert C.f_vector() == [12, 24, 14]
    assert brute_f_vector(full_simplex(3), 2) == [12, 24, 14]
    d1, d2 = C.boundary_matrices()
    assert d2.shape == (24, 14)
    assert sorted({len(col) for col in d2.cols}) == [3, 4]
    assert sum(len(col) == 3 for col in d2.cols) == 8  # triangles
    assert sum(len(col) == 4 for col in d2.cols) == 6  # squares


def test_k_points():
    C = build_ordered(full_simplex(2), 3)
    assert C.f_vector() == [6]


def test_d2_k5():
    assert brute_f_vector(complete_graph(5), 2) == [20, 60, 30]
    C = build_ordered(complete_graph(5), 2)
    assert C.f_vector() == [20, 60, 30]
    assert C.euler() == -10


def test_d3_delta3_enumerator():
    # the brute-force enumerator is authoritative for this count
    assert brute_f_vector(full_simplex(3), 3) == [24, 36]
    assert build_ordered(full_simplex(3), 3).f_vector() == [24, 36]


def test_d2_delta4_top_count():
    assert build_ordered(full_simplex(4), 2).f_vector()[3] == 30


def test_k1_is_the_ambient_complex():
    for X in (full_simplex(4), complete_graph(5), full_simplex(0)):
        assert build_ordered(X, 1).f_vector() == X.f_vector()
        assert build_unordered(X, 1).f_vector() == X.f_vector()


def test_k0_is_a_point():
    C = build_ordered(full_simplex(3), 0)
    assert C.f_vector() == [1] and C.cells(0) == ((),)


def test_too_many_points_is_empty():
    assert build_ordered(full_simplex(2), 4).f_vector() == []
    with pytest.raises(ValueError):
        build_ordered(full_simplex(2), -1)


def test_f_vector_formula_against_enumeration():
    for n in range(0, 7):
        X = full_simplex(n)
        faces = list(X.all_faces())
        for k in range(1, n + 2):
            fv = build_ordered(X, k).f_vector()
            formula = [factorial(k) * binomial(n + 1, k + i) * stirling2(k + i, k) for i in range(n - k + 2)]
            assert fv == formula
            if len(faces) ** k <= 200_000:
                assert fv == brute_f_vector(X, k)
            assert len(fv) - 1 == n - k + 1


def test_unordered_counts():
    assert build_unordered(full_simplex(3), 2).f_vector() == [6, 12, 7]
    assert build_unordered(full_simplex(2), 2).f_vector() == [3, 3]
    for n in range(1, 7):
        for k in range(1, n + 2):
            o = build_ordered(full_simplex(n), k).f_vector()
            u = build_unordered(full_simplex(n), k).f_vector()
            assert [c // factorial(k) for c in o] == u
            assert all(c % factorial(k) == 0 for c in o)


def test_unordered_representatives_are_least():
    U = build_unordered(full_simplex(4), 3)
    for c in U.all_cells():
        assert c == min(itertools.permutations(c))


@pytest.mark.parametrize("ordered", [True, False])
def test_boundary_squares_to_zero(ordered):
    build = build_ordered if ordered else build_unordered
    for n in range(0, 7):
        for k in range(0, n + 2):
            ms = build(full_simplex(n), k).boundary_matrices()
            for a, b in zip(ms, ms[1:]):
                assert (a @ b).is_zero(), (n, k)


def test_ordered_entries_are_units():
    for m in build_ordered(full_simplex(5), 3).boundary_matrices():
        assert all(v in (1, -1) for col in m.cols for v in col.values())


def test_boundary_of_square_cell():
    C = build_ordered(full_simplex(3), 2)
    bd = C.boundary(((1, 2), (3, 4)))
    assert bd == {((2,), (3, 4)): 1, ((1,), (3, 4)): -1, ((1, 2), (4,)): -1, ((1, 2), (3,)): 1}


def test_cell_indexing_is_deterministic():
    a = build_ordered(full_simplex(4), 3)
    b = build_ordered(full_simplex(4), 3)
    assert a.cells_by_dim == b.cells_by_dim
    assert [m.cols for m in a.boundary_matrices()] == [m.cols for m in b.boundary_matrices()]
    for lev in a.cells_by_dim:
        assert list(lev) == sorted(lev)
        assert len({cell_dim(c) for c in lev}) == 1


def test_face_poset():
    P = face_poset(build_ordered(full_simplex(2), 2))
    assert len(P) == 12
    assert len(P.minimal()) == 6 and len(P.maximal()) == 6
    Q = face_poset(build_ordered(full_simplex(1), 2))
    assert len(Q) == 2 and Q.strict_up() == [[], []]
    assert P.leq(((1,), (2,)), ((1,), (2, 3)))
    assert not P.leq(((1,), (2,)), ((3,), (1, 2)))
    with pytest.raises(ValueError):
        face_poset(build_unordered(full_simplex(2), 2))


def test_corrupt_hook_breaks_chain_complex():
    C = corrupt(build_ordered(full_simplex(3), 2), 2)
    with pytest.raises(MalformedComplexError):
        complex_homology(C)


def test_count_f_vector_matches_enumeration():
    spaces = [full_simplex(n) for n in range(0, 6)] + [complete_graph(5), skeleton(full_simplex(5), 2)]
    for X in spaces:
        for k in range(0, len(X.faces(0)) + 2):
            assert count_f_vector(X, k) == build_ordered(X, k).f_vector()
            assert count_f_vector(X, k, ordered=False) == build_unordered(X, k).f_vector()
