import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signtope import bounds
from signtope.bounds import (Realization, RealizationError, ReportConfig, chain_height, coind_lower,
                             facet_intersection_index_bound, ghd_projection_realization, ind_upper_chain_height,
                             invariant_report, linear_map_to_realization, omega_diamond, phi_image_dimension,
                             realization_to_linear_map, srank_upper_search, trivial_realization,
                             verify_realization, vc_dimension)
from signtope.gf2top import swh
from signtope.signcomplex import sign_complex
from signtope.signmat import PartialSignMatrix, from_rows, ghd, hadamard, pg_random_partial, random_total
from signtope.simplicial import Z2Complex, crosspolytope_boundary
from signtope.vrcube import vr_cube
from strategies import sign_matrices


# -- brute-force oracles ------------------------------------------------------
def vc_oracle(A):
    E = A.entries
    best = 0
    for r in range(1, A.n_cols + 1):
        for S in itertools.combinations(range(A.n_cols), r):
            rows = {tuple(row[list(S)]) for row in E}
            if all(p in rows for p in itertools.product((1, -1), repeat=r)):
                best = r
    return best


def omega_oracle(A):
    E = A.entries
    best = 0
    for r in range(1, A.n_cols + 1):
        for S in itertools.combinations(range(A.n_cols), r):
            rows = {tuple(row[list(S)]) for row in E}
            if all(p in rows or tuple(-x for x in p) in rows for p in itertools.product((1, -1), repeat=r)):
                best = r
    return best


def closure_chain_oracle(sets):
    fam = {frozenset(s) for s in sets if s}
    while True:
        new = {a & b for a in fam for b in fam if a & b} - fam
        if not new:
            break
        fam |= new
    best = {}
    for x in sorted(fam, key=len):
        best[x] = 1 + max((best[y] for y in best if y < x), default=0)
    return max(best.values(), default=0)


def height_oracle(A):
    sets = []
    for row in A.entries:
        sets += [set(np.flatnonzero(row == 1).tolist()), set(np.flatnonzero(row == -1).tolist())]
    return closure_chain_oracle(sets)


# -- shattering -------------------------------------------------------------------
def test_vc_examples():
    assert vc_dimension(hadamard(2)) == 2
    assert vc_dimension(PartialSignMatrix(np.ones((3, 3)))) == 0
    assert vc_dimension(from_rows(["++", "+-", "-+", "--"])) == 2


@given(sign_matrices(max_rows=6, max_cols=5))
def test_vc_matches_oracle(A):
    assert vc_dimension(A) == vc_oracle(A)


@given(sign_matrices(max_rows=6, max_cols=5))
def test_omega_matches_oracle(A):
    res = omega_diamond(A)
    assert res.exact and res.value == omega_oracle(A)
    assert len(res.witness) == res.value


def test_omega_examples():
    assert omega_diamond(hadamard(1)).value == 2
    assert omega_diamond(PartialSignMatrix(np.ones((2, 3)))).value == 1
    assert omega_diamond(crosspolytope_boundary(3)).value == 3


@given(sign_matrices(max_rows=6, max_cols=5))
def test_vc_omega_sandwich(A):
    # the provable direction; omega/2 <= vc fails for odd omega (see [[+]])
    vc, om = vc_dimension(A), omega_diamond(A).value
    assert om // 2 <= vc <= om


def test_literal_half_omega_fails_on_one_by_one():
    A = from_rows(["+"])
    assert omega_diamond(A).value == 1 and vc_dimension(A) == 0


# -- height -------------------------------------------------------------------------
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hadamard_height(n):
    assert chain_height(hadamard(n)) == n + 1
    if n in (2, 3):
        assert ind_upper_chain_height(hadamard(n)) == 2 * n + 1


def test_height_examples():
    assert chain_height(PartialSignMatrix(np.ones((3, 4)))) == 1
    assert chain_height(from_rows(["++", "+-"])) == 2


@given(sign_matrices(max_rows=5, max_cols=6))
def test_height_matches_closure_oracle(A):
    assert chain_height(A) == height_oracle(A)


def test_phi_examples():
    # all-Plus: facets {1+..N+} and its antipode are disjoint, so the image is two points
    assert phi_image_dimension(PartialSignMatrix(np.ones((2, 3)))) == 0


@given(sign_matrices(max_rows=5, max_cols=5))
def test_phi_matches_oracle_and_bound(A):
    K = sign_complex(A)
    phi = phi_image_dimension(A)
    assert phi == closure_chain_oracle([set(f) for f in K.facets]) - 1
    assert phi <= 2 * chain_height(A) - 1


@given(sign_matrices(max_rows=4, max_cols=5))
@settings(max_examples=30)
def test_swh_below_height_bound(A):
    assert swh(sign_complex(A)) <= 2 * chain_height(A) - 1


# -- index and coindex --------------------------------------------------------------
def test_incidence_bound():
    for q in (2, 3):
        for s in range(5):
            r = facet_intersection_index_bound(sign_complex(pg_random_partial(q, s)))
            assert r is not None and r[0] == 1 and r[1].free
    assert facet_intersection_index_bound(crosspolytope_boundary(3)) is None


def test_coind_lower_examples():
    b = coind_lower(crosspolytope_boundary(4))
    assert b.value == 3 and b.crosspolytope == 3
    b = coind_lower(vr_cube(3, 2))
    assert b.value == 3 and b.crosspolytope == 3 and b.homological == 3
    assert coind_lower(crosspolytope_boundary(1)).value == 0


@given(sign_matrices(max_rows=4, max_cols=4))
@settings(max_examples=30)
def test_coind_below_swh(A):
    K = sign_complex(A)
    assert coind_lower(K).value <= swh(K)


# -- realizations ---------------------------------------------------------------------
def test_verify_examples():
    assert verify_realization(from_rows(["+"]), Realization(1, [[1]], [[1]]))[0]
    ok, where = verify_realization(from_rows(["+-"]), Realization(1, [[1]], [[1], [1]]))
    assert not ok and where == (0, 1)


def test_zero_inner_product_is_violation():
    assert not verify_realization(from_rows(["+"]), Realization(1, [[0]], [[1]]))[0]


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (6, 2)])
def test_ghd_projection(n, k):
    R = ghd_projection_realization(n, k)
    assert R.d == 2 * k + 1 and verify_realization(ghd(n, k), R)[0]


def test_ghd_projection_exhaustive_3_1():
    # oracle: sign of the 3-coordinate inner product vs the Hamming distance
    R = ghd_projection_realization(3, 1)
    G = R.gram()
    for x in range(8):
        for y in range(8):
            d = bin(x ^ y).count("1")
            assert G[x, y] == 3 - 2 * d


@given(sign_matrices())
def test_trivial_realization_always_valid(A):
    assert verify_realization(A, trivial_realization(A))[0]


def test_realization_json_round_trip():
    R = Realization(2, [[Fraction(1, 3), 2]], [[1, Fraction(-5, 7)]])
    assert Realization.from_json(json.loads(json.dumps(R.to_json()))) == R


@pytest.mark.parametrize("A,R", [(ghd(4, 1), ghd_projection_realization(4, 1)),
                                 (from_rows(["+", "-"]), Realization(1, [[1], [-1]], [[1]]))],
                         ids=["ghd41", "one-column"])
def test_linear_map_round_trip(A, R):
    g, cert = realization_to_linear_map(A, R)
    assert cert.check(g) is None
    R2 = linear_map_to_realization(A, g)
    assert R2.d == R.d and verify_realization(A, R2)[0]


def test_one_by_one_linear_map():
    A = from_rows(["+"])
    R2 = linear_map_to_realization(A, np.array([[1]], dtype=object))
    assert R2.d == 1 and verify_realization(A, R2)[0]


def test_zero_map_is_rejected():
    A = ghd(4, 1)
    with pytest.raises(RealizationError) as exc:
        linear_map_to_realization(A, np.zeros((3, A.n_cols), dtype=object))
    assert exc.value.where is not None


def test_zeroed_column_breaks_certificate():
    A = ghd(4, 1)
    R = ghd_projection_realization(4, 1)
    cols = list(R.cols)
    cols[0] = (0, 0, 0)
    with pytest.raises(RealizationError) as exc:
        realization_to_linear_map(A, Realization(3, R.rows, cols))
    assert 0 in exc.value.where or 1 in exc.value.where


@given(sign_matrices(max_rows=4, max_cols=4))
@settings(max_examples=25)
def test_trivial_round_trip_property(A):
    R = trivial_realization(A)
    g, _ = realization_to_linear_map(A, R)
    assert verify_realization(A, linear_map_to_realization(A, g))[0]


def test_search_examples():
    R = srank_upper_search(ghd(4, 1), 3)
    assert R is not None and R.d <= 3 and verify_realization(ghd(4, 1), R)[0]
    assert srank_upper_search(hadamard(1), 1) is None
    A = random_total(4, 2)
    assert srank_upper_search(A, 4).d == 4


# -- report ------------------------------------------------------------------------------
def test_report_hadamard2():
    rep = invariant_report(hadamard(2))
    v = rep.values
    assert v["vc"] == 2 and v["omega_diamond"] in (2, 3, 4) and v["h"] == 3
    assert v["ind_ub_chain_height"] == 5
    assert v["ind_ub"] <= 5
    assert rep.chain_ok
    out = json.loads(rep.dumps())
    assert out["schema"] == 1 and out["chain_ok"] is True


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_report_pg(seed):
    rep = invariant_report(pg_random_partial(2, seed), ReportConfig(search_d_max=3))
    assert rep.values["ind_ub"] == 1 and rep.provenance["ind_ub"] == "incidence-graph"
    assert rep.values["swh"] <= 1 and rep.chain_ok


def test_report_component_selection():
    rep = invariant_report(hadamard(2), ReportConfig(components=frozenset({"vc", "height"})))
    assert "swh" not in rep.values and rep.values["h"] == 3


def test_report_records_caps():
    rep = invariant_report(random_total(12, 0), ReportConfig(components=frozenset({"height"}), max_sets=3))
    assert "height" in rep.unavailable
