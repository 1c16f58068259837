"""Translating between partial sign matrices and free Z2-complexes.

Column ``j`` of a matrix becomes the vertex pair ``2j`` (``j+``) / ``2j+1``
(``j-``).  Row ``r`` contributes the signed support ``sigma_r^+`` (``j+`` where
the entry is +1, ``j-`` where it is -1) and its antipode ``sigma_r^-``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signmat import MINUS, PLUS, STAR, PartialSignMatrix, SignMatrixError, ghd
from .simplicial import ComplexError, Face, Z2Complex
from .vrcube import vr_cliques


def signed_support(row: np.ndarray) -> Face:
    return tuple(sorted([2 * j for j in np.flatnonzero(row == PLUS).tolist()]
                        + [2 * j + 1 for j in np.flatnonzero(row == MINUS).tolist()]))


def sign_complex(A: PartialSignMatrix) -> Z2Complex:
    """S(A): facets are the inclusion-maximal signed supports ``sigma_r^+-``.

    ``meta["row_supports"][r]`` keeps ``sigma_r^+`` for every row, including
    rows that are duplicates or absorbed by a larger support.
    """
    plus = [signed_support(row) for row in A.entries]
    K = Z2Complex.from_pairs(A.n_cols, plus, symmetrize=True,
                             meta={"row_supports": tuple(plus), "source": dict(A.source)})
    return K


def _orbit_representative(f: Face) -> Face:
    return min(f, Z2Complex.involution(f))


def matrix_from_complex(K: Z2Complex) -> PartialSignMatrix:
    """A_K: one row per facet orbit, read off the orbit's representative.

    The representative is the facet whose sorted vertex-id tuple is
    lexicographically smaller; rows follow the order of representatives.
    """
    if not isinstance(K, Z2Complex):
        raise ComplexError("matrix_from_complex needs a free Z2 complex")
    reps = sorted({_orbit_representative(f) for f in K.facets})
    if not reps:
        raise ComplexError("the empty complex has no matrix")
    a = np.full((len(reps), K.n_pairs), STAR, dtype=np.int8)
    for i, f in enumerate(reps):
        for v in f:
            a[i, v >> 1] = MINUS if v & 1 else PLUS
    return PartialSignMatrix(a)


def row_cover_nerve(A: PartialSignMatrix) -> Z2Complex:
    """Nerve of the cover of S(A) by the subcomplexes induced on each ``sigma_i^+-``.

    Cover element ``K_i^+`` is nerve vertex ``2i`` and ``K_i^-`` is ``2i+1``;
    the cover is indexed by rows, so equal rows give distinct nerve vertices.
    Induced subcomplexes meet iff they share a vertex, so each vertex ``c`` of
    S(A) spans the simplex of all cover elements containing ``c``.
    """
    if (A.entries == STAR).all(axis=0).any():
        j = int(np.flatnonzero((A.entries == STAR).all(axis=0))[0])
        raise SignMatrixError(f"column {j} has only Star entries; the cover misses vertex {j + 1}+-")
    K = sign_complex(A)
    supports = [set(s) for s in K.meta["row_supports"]]
    simplices = []
    for c in range(K.n_vertices):
        members = []
        for i, s in enumerate(supports):
            if c in s:
                members.append(2 * i)
            if c ^ 1 in s:  # c lies in sigma_i^- iff its antipode lies in sigma_i^+
                members.append(2 * i + 1)
        simplices.append(members)
    return Z2Complex.from_pairs(A.n_rows, simplices)


@dataclass(frozen=True)
class VertexMapCheck:
    ok: bool
    checked: int
    witness: tuple[int, ...] | None = None  # first failing VR facet, as bitstrings
    centers: tuple[int, ...] = ()  # one x0 per facet when ok


def ghd_vertex_map_check(n: int, k: int) -> VertexMapCheck:
    """Check that ``y -> {y-, (y^c)+}`` maps every VR(Q_n, k) facet into a facet of S(GHD).

    For each facet sigma a center ``x0`` with ``sigma`` inside the radius-k ball
    is located, and the image vertex set is then tested for literal
    containment in ``sigma_{x0}^-`` of S(ghd(n, k)).
    """
    A = ghd(n, k)
    full = (1 << n) - 1
    neg_supports = [set(Z2Complex.involution(signed_support(row))) for row in A.entries]
    facets = vr_cliques(n, k)
    pts = np.arange(1 << n)
    popcount = np.array([int(v).bit_count() for v in range(1 << n)])
    centers = []
    for sigma in facets:
        dist = popcount[pts[:, None] ^ np.array(sigma)[None, :]]
        cand = np.flatnonzero(dist.max(axis=1) <= k)
        image = {2 * y + 1 for y in sigma} | {2 * (y ^ full) for y in sigma}
        hit = next((int(x0) for x0 in cand if image <= neg_supports[x0]), None)
        if hit is None:
            return VertexMapCheck(False, len(centers) + 1, witness=tuple(sigma))
        centers.append(hit)
    return VertexMapCheck(True, len(facets), centers=tuple(centers))
