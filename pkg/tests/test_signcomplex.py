import numpy as np
import pytest
from hypothesis import given, settings

from signtope.signcomplex import (ghd_vertex_map_check, matrix_from_complex, row_cover_nerve, sign_complex,
                                  signed_support)
from signtope.signmat import PartialSignMatrix, SignMatrixError, from_rows, ghd, hadamard, transpose
from signtope.simplicial import Z2Complex, crosspolytope_boundary, equivariant_isomorphic
from strategies import sign_matrices


def test_signed_support():
    assert signed_support(np.array([1, -1, 0])) == (0, 3)


def test_small_sign_complexes():
    assert sign_complex(from_rows(["+"])).facets == ((0,), (1,))
    assert sign_complex(from_rows(["+*"])).facets == ((0,), (1,))
    K = sign_complex(hadamard(1))
    assert set(K.facets) == {(0, 2), (0, 3), (1, 2), (1, 3)}
    assert equivariant_isomorphic(K, crosspolytope_boundary(2))[0]


@given(sign_matrices())
def test_sign_complex_facets_are_maximal_row_supports(A):
    K = sign_complex(A)
    supports = set()
    for row in A.entries:
        s = frozenset(signed_support(row))
        supports |= {s, frozenset(v ^ 1 for v in s)}
    maximal = {s for s in supports if not any(s < t for t in supports)}
    assert {frozenset(f) for f in K.facets} == maximal


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (5, 2)])
def test_ghd_facet_count(n, k):
    # rows x and its complement give the same facet pair
    K = sign_complex(ghd(n, k))
    distinct = {frozenset(signed_support(r)) for r in ghd(n, k).entries}
    assert len(K.facets) == len(distinct)
    assert len(K.facets) == 2 ** n


def test_matrix_from_complex_examples():
    assert np.array_equal(matrix_from_complex(crosspolytope_boundary(1)).entries, [[1]])
    A = matrix_from_complex(crosspolytope_boundary(2))
    assert A.shape == (2, 2) and A.is_total()
    assert equivariant_isomorphic(sign_complex(A), crosspolytope_boundary(2))[0]
    assert matrix_from_complex(crosspolytope_boundary(3)).shape == (4, 3)


@given(sign_matrices())
def test_complex_matrix_round_trip(A):
    K = sign_complex(A)
    if any(not K.contains((2 * j,)) for j in range(A.n_cols)):
        return  # an all-Star column leaves an isolated-free pair; S(A_K) has fewer pairs
    assert sign_complex(matrix_from_complex(K)).facets == K.facets


def test_row_cover_nerve_trivial():
    N = row_cover_nerve(from_rows(["+"]))
    assert N.facets == ((0,), (1,))


def test_row_cover_nerve_rejects_star_column():
    with pytest.raises(SignMatrixError):
        row_cover_nerve(from_rows(["+*"]))


def test_nerve_transpose_hadamard():
    for n in (1, 2):
        A = hadamard(n)
        assert equivariant_isomorphic(row_cover_nerve(A), sign_complex(transpose(A)))[0]


@given(sign_matrices(max_rows=4, max_cols=4, total=True))
@settings(max_examples=40)
def test_nerve_transpose_total(A):
    assert equivariant_isomorphic(row_cover_nerve(A), sign_complex(transpose(A)))[0]


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (5, 2)])
def test_ghd_vertex_map(n, k):
    res = ghd_vertex_map_check(n, k)
    assert res.ok and res.checked == len(res.centers)
