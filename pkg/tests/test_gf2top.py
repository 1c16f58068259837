import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signtope import _gf2
from signtope.gf2top import (Cochain, betti, chain_complex, cohomology_basis, coboundary, cup_product,
                             homological_connectivity, is_coboundary, is_cocycle, join_factors, swh,
                             swh_via_quotient, unit_cochain)
from signtope.signcomplex import sign_complex
from signtope.simplicial import (PlainComplex, Z2Complex, crosspolytope_boundary, join,
                                 lift_double_cover, rp2_6, simplex)
from strategies import sign_matrices


def dense_rank_mod2(M):
    M = (np.array(M, dtype=np.uint8) % 2).copy()
    r = 0
    rows, cols = M.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i, c]), None)
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] ^= M[r]
        r += 1
    return r


def betti_oracle(K):
    """Reduced Betti numbers from dense boundary matrices of every face."""
    faces = {}
    for f in K.facets:
        for r in range(1, len(f) + 1):
            for s in itertools.combinations(f, r):
                faces.setdefault(r - 1, set()).add(s)
    faces = {d: sorted(fs) for d, fs in faces.items()}
    top = max(faces)
    ranks = {}
    for d in range(top + 2):
        up, down = faces.get(d, []), faces.get(d - 1, [()] if d == 0 else [])
        idx = {f: i for i, f in enumerate(down)}
        M = np.zeros((len(down), len(up)), dtype=np.uint8)
        for j, f in enumerate(up):
            for i in range(len(f)):
                M[idx[f[:i] + f[i + 1:]], j] = 1
        ranks[d] = dense_rank_mod2(M) if M.size else 0
    return [len(faces[d]) - ranks[d] - ranks[d + 1] for d in range(top + 1)]


small_complexes = st.lists(st.frozensets(st.integers(0, 6), min_size=1, max_size=4), min_size=1, max_size=8).map(
    lambda ss: PlainComplex.from_simplices(7, ss))


def test_gf2_kernel_and_solve():
    cols = [0b011, 0b110, 0b101]
    assert _gf2.rank(cols) == 2
    ker = _gf2.kernel(cols)
    assert len(ker) == 1
    x = ker[0]
    acc = 0
    for i in _gf2.bits(x):
        acc ^= cols[i]
    assert acc == 0
    assert _gf2.solve(cols, 0b111) is None
    sol = _gf2.solve(cols, 0b101)
    acc = 0
    for i in _gf2.bits(sol):
        acc ^= cols[i]
    assert acc == 0b101


def test_boundary_matrices():
    tri = PlainComplex.from_simplices(3, [(0, 1), (1, 2), (0, 2)])
    C = chain_complex(tri)
    assert C.matrix(1).shape == (3, 3) and C.rank(1) == 2
    assert chain_complex(simplex(4), 3).check_square_zero()
    assert chain_complex(crosspolytope_boundary(3)).sizes() == [6, 12, 8]


@given(small_complexes)
def test_square_zero_property(K):
    assert chain_complex(K).check_square_zero()


@given(small_complexes)
def test_betti_matches_dense_oracle(K):
    assert betti(K) == betti_oracle(K)


@given(small_complexes)
def test_euler_characteristic(K):
    f = K.f_vector()
    chi = sum((-1) ** i * x for i, x in enumerate(f))
    b = betti(K)
    assert chi - 1 == sum((-1) ** i * x for i, x in enumerate(b))


def test_betti_examples():
    assert betti(crosspolytope_boundary(4)) == [0, 0, 0, 1]
    cube = PlainComplex.from_simplices(8, [(x, x ^ b) for x in range(8) for b in (1, 2, 4)])
    assert betti(cube)[1] == 5
    assert betti(simplex(5)) == [0] * 5
    assert betti(rp2_6()) == [0, 1, 1]


@given(small_complexes, small_complexes)
@settings(max_examples=25)
def test_join_split_agrees_with_direct(K, L):
    J = join(K, L)
    assert betti(J, split_joins=True) == betti(J, split_joins=False)


def test_join_factors_of_crosspolytope():
    fs = join_factors(crosspolytope_boundary(4))
    assert fs is not None and len(fs) == 4


def test_homological_connectivity():
    assert homological_connectivity(crosspolytope_boundary(4)) == 2
    assert homological_connectivity(crosspolytope_boundary(1)) == -1
    assert homological_connectivity(crosspolytope_boundary(3)) == 1


def test_cup_product_rp2():
    T = rp2_6()
    (a,) = cohomology_basis(T, 1)
    aa = cup_product(T, a, a)
    assert aa and not is_coboundary(T, aa)


def test_cup_product_units():
    T = rp2_6()
    (a,) = cohomology_basis(T, 1)
    zero = Cochain(1, frozenset())
    assert not cup_product(T, zero, a)
    one = cup_product(T, unit_cochain(T), a)
    diff = Cochain(1, one.support ^ a.support)
    assert is_coboundary(T, diff) or not diff


@given(st.permutations(range(6)))
@settings(max_examples=20)
def test_cup_square_is_order_independent_in_cohomology(order):
    T = rp2_6()
    (a,) = cohomology_basis(T, 1)
    assert not is_coboundary(T, cup_product(T, a, a, order=list(order)))


def test_coboundary_is_cocycle():
    K = crosspolytope_boundary(3)
    c = Cochain(0, frozenset({(0,), (3,)}))
    assert is_cocycle(K, coboundary(K, c))
    assert is_coboundary(K, coboundary(K, c))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_swh_crosspolytope(d):
    assert swh(crosspolytope_boundary(d)) == d - 1


def test_swh_lift_of_rp2():
    (a,) = cohomology_basis(rp2_6(), 1)
    L = lift_double_cover(rp2_6(), a.support)
    assert swh(L) == 2 == swh_via_quotient(L)


@given(sign_matrices(max_rows=4, max_cols=4))
@settings(max_examples=30)
def test_swh_two_methods_agree(A):
    K = sign_complex(A)
    assert swh(K) == swh_via_quotient(K)


@given(sign_matrices(max_rows=4, max_cols=5))
@settings(max_examples=30)
def test_swh_at_most_dimension(A):
    K = sign_complex(A)
    assert 0 <= swh(K) <= K.dim
