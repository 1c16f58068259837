import itertools
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signtope import simplicial as sc
from signtope._limits import CapExceeded
from signtope.simplicial import (ComplexError, PlainComplex, Poset, Z2Complex, barycentric_subdivision,
                                 crosspolytope_boundary, deleted_join_simplex, equivariant_isomorphic,
                                 face_poset, isomorphic, lift_double_cover, maximal_faces, order_complex,
                                 quotient, rp2_6, simplex, skeleton)


def brute_maximal(simplices):
    sets = {frozenset(s) for s in simplices}
    return sorted(tuple(sorted(s)) for s in sets if not any(s < t for t in sets))


@given(st.lists(st.frozensets(st.integers(0, 7), min_size=1, max_size=4), max_size=15))
def test_maximal_faces_matches_brute_force(simplices):
    assert sorted(maximal_faces(simplices)) == brute_maximal(simplices)


def test_crosspolytope_small():
    assert crosspolytope_boundary(1).facets == ((0,), (1,))
    C2 = crosspolytope_boundary(2)
    assert len(C2.facets) == 4 and all(len(f) == 2 for f in C2.facets)
    assert C2.f_vector() == [4, 4]
    assert crosspolytope_boundary(3).f_vector() == [6, 12, 8]


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_crosspolytope_faces_are_antipode_free(d):
    # every subset without an antipodal pair is a face, and nothing else
    K = crosspolytope_boundary(d)
    for S in itertools.chain.from_iterable(itertools.combinations(range(2 * d), r) for r in range(1, 2 * d + 1)):
        free = len({v >> 1 for v in S}) == len(S)
        assert K.contains(S) == free


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_deleted_join_is_crosspolytope(d):
    ok, _ = equivariant_isomorphic(deleted_join_simplex(d), crosspolytope_boundary(d))
    assert ok


def test_z2_rejects_non_free():
    with pytest.raises(ComplexError):
        Z2Complex.from_pairs(1, [(0, 1)])
    with pytest.raises(ComplexError):
        Z2Complex.from_pairs(2, [(0, 2)])  # not closed under the involution


def test_skeleton():
    assert skeleton(simplex(4), 1).f_vector() == [4, 6]
    oct_ = crosspolytope_boundary(3)
    assert skeleton(oct_, 1).f_vector() == [6, 12]
    assert skeleton(oct_, oct_.dim).facets == oct_.facets


def test_subdivision_small():
    edge = simplex(2)
    sd = barycentric_subdivision(edge)
    assert sd.f_vector() == [3, 2]
    sd4 = barycentric_subdivision(crosspolytope_boundary(2))
    assert sd4.f_vector() == [8, 8]
    assert isinstance(sd4, Z2Complex)


@pytest.mark.parametrize("K", [simplex(3), crosspolytope_boundary(3), rp2_6()], ids=["tri", "oct", "rp2"])
def test_subdivision_f_vector(K):
    # sd has one vertex per face and one top simplex per (facet, ordering)
    sd = barycentric_subdivision(K)
    assert sd.n_vertices == sum(K.f_vector())
    assert len(sd.facets) == sum(factorial(len(f)) for f in K.facets)


def test_subdivision_cap():
    with pytest.raises(CapExceeded):
        barycentric_subdivision(crosspolytope_boundary(6), cap=100)


def test_order_complex_examples():
    anti = Poset((0, 1, 2), lambda a, b: a == b)
    assert order_complex(anti).facets == ((0,), (1,), (2,))
    chain = Poset((0, 1, 2), lambda a, b: a <= b)
    assert order_complex(chain).facets == ((0, 1, 2),)
    P = face_poset(simplex(2))
    assert isomorphic(order_complex(P), barycentric_subdivision(simplex(2)))[0]


def test_isomorphism_basics():
    K = crosspolytope_boundary(3)
    ok, m = equivariant_isomorphic(K, K)
    assert ok and all(m[v] == v for v in range(K.n_vertices))
    assert not equivariant_isomorphic(crosspolytope_boundary(2), crosspolytope_boundary(3))[0]


@given(st.permutations(range(4)), st.lists(st.booleans(), min_size=4, max_size=4))
def test_isomorphism_finds_signed_relabelling(perm, flips):
    K = crosspolytope_boundary(4)
    mapping = {}
    for j, (p, f) in enumerate(zip(perm, flips)):
        mapping[2 * j] = 2 * p + f
        mapping[2 * j + 1] = 2 * p + (1 - f)
    L = Z2Complex.from_simplices(8, [[mapping[v] for v in f] for f in K.facets])
    ok, m = equivariant_isomorphic(K, L)
    assert ok
    assert {tuple(sorted(m[v] for v in f)) for f in K.facets} == set(L.facets)
    assert all(m[v ^ 1] == m[v] ^ 1 for v in m)


def test_isomorphism_detects_difference():
    # a 6-cycle and two triangles have the same f-vector
    cyc = PlainComplex.from_simplices(6, [(i, (i + 1) % 6) for i in range(6)])
    tris = PlainComplex.from_simplices(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not isomorphic(cyc, tris)[0]


def test_quotient_s0():
    Q = quotient(crosspolytope_boundary(1))
    assert Q.complex.n_vertices == 1 and not Q.cocycle


def test_quotient_square_is_nontrivial_cover():
    Q = quotient(crosspolytope_boundary(2))
    assert Q.subdivided
    # the quotient is a cycle and the cocycle is odd on it
    assert all(len(f) == 2 for f in Q.complex.facets)
    assert len(Q.cocycle) % 2 == 1
    assert not sc.is_coboundary_1(Q.complex, Q.cocycle)


def test_quotient_two_swapped_edges():
    K = Z2Complex.from_pairs(2, [(0, 2)], symmetrize=True)
    Q = quotient(K)
    assert not Q.subdivided
    assert Q.complex.facets == ((0, 1),) and not Q.cocycle


def rp2_w1():
    from signtope.gf2top import cohomology_basis
    return cohomology_basis(rp2_6(), 1)[0].support


def test_lift_of_rp2_is_sphere():
    from signtope.gf2top import betti
    L = lift_double_cover(rp2_6(), rp2_w1())
    assert L.n_vertices == 12 and L.f_vector() == [12, 30, 20]
    assert betti(L) == [0, 0, 1]
    assert not L.meta["trivial_cover"]


def test_trivial_lift():
    L = lift_double_cover(rp2_6(), [])
    assert L.meta["trivial_cover"]
    assert len(L.facets) == 2 * len(rp2_6().facets)


def test_lift_rejects_non_cocycle():
    with pytest.raises(ComplexError):
        lift_double_cover(rp2_6(), [(0, 1)])


def test_quotient_of_lift_round_trip():
    T = rp2_6()
    w = rp2_w1()
    Q = quotient(lift_double_cover(T, w))
    assert not Q.subdivided
    ok, m = isomorphic(Q.complex, T)
    assert ok
    moved = {tuple(sorted((m[a], m[b]))) for a, b in Q.cocycle}
    diff = moved ^ {tuple(sorted(e)) for e in w}
    assert sc.is_coboundary_1(T, diff)


def test_text_round_trip():
    for K in (crosspolytope_boundary(3), rp2_6()):
        L = sc.from_text(sc.to_text(K))
        assert type(L) is type(K) and L.facets == K.facets
