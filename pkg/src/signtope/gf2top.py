"""Mod-2 (co)homology: boundary matrices, Betti numbers, cup products, swh.

Chains and cochains are bit-packed Python ints indexed by a sorted face
basis.  All ranks come from deterministic column elimination
(:mod:`signtope._gf2`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _gf2
from .simplicial import ComplexError, Face, PlainComplex, Z2Complex, quotient


@dataclass(frozen=True)
class Gf2ChainComplex:
    """Face bases per dimension and boundary columns as bitmasks.

    ``boundaries[d][i]`` is the boundary of ``bases[d][i]`` as a bitmask over
    ``bases[d-1]``; ``boundaries[0]`` is empty.
    """

    bases: tuple[tuple[Face, ...], ...]
    boundaries: tuple[tuple[int, ...], ...]

    @property
    def dims(self) -> int:
        return len(self.bases) - 1

    def sizes(self) -> list[int]:
        return [len(b) for b in self.bases]

    def matrix(self, d: int) -> np.ndarray:
        """Dense ``|bases[d-1]| x |bases[d]|`` boundary matrix."""
        rows = len(self.bases[d - 1])
        M = np.zeros((rows, len(self.bases[d])), dtype=np.uint8)
        for j, col in enumerate(self.boundaries[d]):
            M[_gf2.bits(col), j] = 1
        return M

    def rank(self, d: int) -> int:
        if d <= 0 or d > self.dims:
            return 0
        return _gf2.rank(self.boundaries[d])

    def check_square_zero(self) -> bool:
        for d in range(2, self.dims + 1):
            lower = self.boundaries[d - 1]
            for col in self.boundaries[d]:
                acc = 0
                for i in _gf2.bits(col):
                    acc ^= lower[i]
                if acc:
                    return False
        return True


def chain_complex(K: PlainComplex, max_dim: int | None = None, cap: int | None = None) -> Gf2ChainComplex:
    faces = K.faces(max_dim, cap=cap)
    bases = tuple(tuple(faces[d]) for d in sorted(faces))
    boundaries = [()]
    for d in range(1, len(bases)):
        index = {f: i for i, f in enumerate(bases[d - 1])}
        cols = []
        for f in bases[d]:
            col = 0
            for i in range(len(f)):
                col |= 1 << index[f[:i] + f[i + 1:]]
            cols.append(col)
        boundaries.append(tuple(cols))
    cc = Gf2ChainComplex(bases, tuple(boundaries))
    return cc


def _betti_direct(K: PlainComplex, max_dim: int) -> list[int]:
    if not K.facets:
        return [0] * (max_dim + 1)
    top = min(max_dim + 1, K.dim)
    cc = chain_complex(K, top)
    ranks = [1] + [cc.rank(d) for d in range(1, top + 2)]  # ranks[0] = augmentation
    out = []
    for d in range(max_dim + 1):
        if d > cc.dims:
            out.append(0)
            continue
        out.append(len(cc.bases[d]) - ranks[d] - (ranks[d + 1] if d + 1 < len(ranks) else 0))
    return out


def join_factors(K: PlainComplex) -> list[PlainComplex] | None:
    """Split ``K`` as a join of induced subcomplexes on disjoint vertex sets.

    Two vertices joined by no edge must sit in the same join factor, so the
    candidate factors are the connected components of the complement of the
    1-skeleton.  The split is accepted only if the facets are exactly all
    combinations of the factors' facets.  Returns None when ``K`` does not
    split.
    """
    V = K.vertices()
    if len(V) < 2 or len(K.facets) < 2:
        return None
    pos = {v: i for i, v in enumerate(V)}
    B = np.zeros((len(K.facets), len(V)), dtype=np.int32)
    for i, f in enumerate(K.facets):
        B[i, [pos[v] for v in f]] = 1
    adj = (B.T @ B) > 0
    parent = list(range(len(V)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    non_adj = np.argwhere(~adj)
    for i, j in non_adj:
        if i < j:
            ri, rj = find(int(i)), find(int(j))
            if ri != rj:
                parent[ri] = rj
    comps: dict[int, list[int]] = {}
    for i in range(len(V)):
        comps.setdefault(find(i), []).append(V[i])
    if len(comps) < 2:
        return None
    blocks = sorted(comps.values())
    restrictions = []
    for blk in blocks:
        bs = set(blk)
        restrictions.append({tuple(v for v in f if v in bs) for f in K.facets})
    if any(() in r for r in restrictions):
        return None
    if math.prod(len(r) for r in restrictions) != len(K.facets):
        return None
    factors = []
    for blk, rs in zip(blocks, restrictions):
        local = {v: i for i, v in enumerate(blk)}
        factors.append(PlainComplex.from_simplices(len(blk), [[local[v] for v in f] for f in rs]))
    return factors


def betti(K: PlainComplex, max_dim: int | None = None, split_joins: bool = True) -> list[int]:
    """Reduced mod-2 Betti numbers in degrees ``0..max_dim``.

    With ``split_joins`` the complex is first factored as a join (see
    :func:`join_factors`) and the factors recombined with the join Kunneth
    formula ``H~_{n+1}(K*L) = sum_{i+j=n} H~_i(K) (x) H~_j(L)``.
    """
    top = K.dim if max_dim is None else max_dim
    if split_joins:
        factors = join_factors(K)
        if factors is not None:
            # poly[e] = beta~_{e-1}; joins multiply these shifted polynomials
            poly = [1]
            for F in factors:
                b = betti(F, min(top, F.dim), split_joins=True)
                fpoly = [0] + b
                new = [0] * (len(poly) + len(fpoly) - 1)
                for i, x in enumerate(poly):
                    if x:
                        for j, y in enumerate(fpoly):
                            new[i + j] += x * y
                poly = new[: top + 2]
            poly += [0] * (top + 2 - len(poly))
            return poly[1: top + 2]
    return _betti_direct(K, top)


def homological_connectivity(K: PlainComplex, split_joins: bool = True) -> int:
    """Largest ``r`` with reduced Betti numbers zero in degrees ``<= r``.

    -1 when ``K`` is disconnected.  If all reduced Betti numbers vanish the
    complex is mod-2 acyclic and ``dim K`` is returned (every degree that can
    carry homology has been checked).
    """
    b = betti(K, K.dim, split_joins=split_joins)
    for d, x in enumerate(b):
        if x:
            return d - 1
    return K.dim


# -- cochains and cup products ----------------------------------------
@dataclass(frozen=True)
class Cochain:
    """Mod-2 cochain: the set of faces (sorted vertex tuples) where it is 1."""

    dim: int
    support: frozenset[Face]

    def __post_init__(self):
        for f in self.support:
            if len(f) != self.dim + 1:
                raise ComplexError(f"face {f} has the wrong size for a {self.dim}-cochain")

    def __bool__(self):
        return bool(self.support)


def unit_cochain(K: PlainComplex) -> Cochain:
    return Cochain(0, frozenset((v,) for v in K.vertices()))


def coboundary(K: PlainComplex, c: Cochain) -> Cochain:
    out: set[Face] = set()
    for f in K.faces(c.dim + 1).get(c.dim + 1, []):
        hits = sum(1 for i in range(len(f)) if f[:i] + f[i + 1:] in c.support)
        if hits % 2:
            out.add(f)
    return Cochain(c.dim + 1, frozenset(out))


def is_cocycle(K: PlainComplex, c: Cochain) -> bool:
    return not coboundary(K, c)


def is_coboundary(K: PlainComplex, c: Cochain) -> bool:
    if c.dim == 0:
        return not c.support
    faces = K.faces(c.dim)
    lower, upper = faces.get(c.dim - 1, []), faces.get(c.dim, [])
    uidx = {f: i for i, f in enumerate(upper)}
    cols = [0] * len(lower)
    lidx = {f: i for i, f in enumerate(lower)}
    for f, j in uidx.items():
        for i in range(len(f)):
            cols[lidx[f[:i] + f[i + 1:]]] |= 1 << j
    target = 0
    for f in c.support:
        target |= 1 << uidx[f]
    return _gf2.solve(cols, target) is not None


def cup_product(K: PlainComplex, a: Cochain, b: Cochain, order: Sequence[int] | None = None,
                check: bool = True) -> Cochain:
    """Simplicial cup product w.r.t. a total vertex order (default: by vertex id).

    ``(a u b)(v_0 < ... < v_{p+q}) = a(v_0..v_p) * b(v_p..v_{p+q})``.
    """
    if check and (not is_cocycle(K, a) or not is_cocycle(K, b)):
        raise ComplexError("cup_product expects cocycles")
    rank = {v: i for i, v in enumerate(order)} if order is not None else None
    p, q = a.dim, b.dim
    out = set()
    for f in K.faces(p + q).get(p + q, []):
        seq = sorted(f, key=rank.__getitem__) if rank else f
        front = tuple(sorted(seq[: p + 1]))
        back = tuple(sorted(seq[p:]))
        if front in a.support and back in b.support:
            out.add(f)
    return Cochain(p + q, frozenset(out))


def cohomology_basis(K: PlainComplex, p: int) -> list[Cochain]:
    """Cocycle representatives of a basis of ``H^p(K; F_2)``."""
    faces = K.faces(p + 1)
    cur = faces.get(p, [])
    nxt = faces.get(p + 1, [])
    nidx = {f: i for i, f in enumerate(nxt)}
    delta = [0] * len(cur)
    cidx = {f: i for i, f in enumerate(cur)}
    for f, j in nidx.items():
        for i in range(len(f)):
            delta[cidx[f[:i] + f[i + 1:]]] |= 1 << j
    cocycles = _gf2.kernel(delta)
    if p == 0:
        boundaries: list[int] = []
    else:
        prev = faces.get(p - 1, [])
        pidx = {f: i for i, f in enumerate(prev)}
        boundaries = [0] * len(prev)
        for f, j in cidx.items():
            for i in range(len(f)):
                boundaries[pidx[f[:i] + f[i + 1:]]] |= 1 << j
    span = _gf2.Span(boundaries)
    reps = []
    for z in cocycles:
        if span.add(z):
            reps.append(Cochain(p, frozenset(cur[i] for i in _gf2.bits(z))))
    return reps


# -- Stiefel-Whitney height ---------------------------------------------
def _orbit_cells(K: Z2Complex, max_dim: int) -> dict[int, list[Face]]:
    """One representative per orbit of faces: the one whose smallest vertex is ``+``.

    Vertices of a face lie in distinct pairs, so the ascending vertex order is
    also the order by pair index; the orbit cells form a Delta-complex model
    of the quotient with that vertex order on every cell.
    """
    faces = K.faces(max_dim)
    return {d: [f for f in fs if f[0] % 2 == 0] for d, fs in faces.items()}


def _orbit_rep(f: Face) -> Face:
    return f if f[0] % 2 == 0 else tuple(v ^ 1 for v in f)


def swh(K: Z2Complex, max_power: int | None = None) -> int:
    """Largest ``m`` with ``w_1^m != 0`` in the mod-2 cohomology of ``K / Z2``.

    Works on the orbit Delta-complex of ``K`` (no subdivision).  ``w_1`` is
    1 on an edge orbit iff the edge joins a ``+`` vertex to a ``-`` vertex; the
    power ``w_1^m`` is 1 on an m-cell iff every consecutive edge of the
    ordered cell switches sheets.
    """
    if not isinstance(K, Z2Complex):
        raise ComplexError("swh needs a free Z2 complex")
    if not K.facets:
        raise ComplexError("swh of the empty complex is undefined")
    top = K.dim if max_power is None else min(K.dim, max_power)
    cells = _orbit_cells(K, top)
    height = 0
    for m in range(1, top + 1):
        upper = cells.get(m, [])
        target = 0
        for j, f in enumerate(upper):
            if all((f[i] ^ f[i + 1]) & 1 for i in range(m)):
                target |= 1 << j
        if not target:
            break
        lower = cells[m - 1]
        lidx = {f: i for i, f in enumerate(lower)}
        cols = [0] * len(lower)
        for j, f in enumerate(upper):
            for i in range(len(f)):
                cols[lidx[_orbit_rep(f[:i] + f[i + 1:])]] ^= 1 << j
        if _gf2.solve(cols, target) is not None:
            break
        height = m
    return height


def first_sw_class(K: Z2Complex) -> tuple[PlainComplex, Cochain]:
    """Simplicial quotient of ``K`` (subdivided if needed) and its ``w_1`` cocycle."""
    q = quotient(K)
    return q.complex, Cochain(1, frozenset(q.cocycle))


def swh_via_quotient(K: Z2Complex) -> int:
    """swh computed on the simplicial quotient with explicit cup products.

    Independent of :func:`swh`; meant for small complexes and cross-checks.
    """
    T, w = first_sw_class(K)
    power = w
    height = 0
    for m in range(1, T.dim + 1):
        if m > 1:
            power = cup_product(T, power, w, check=False)
        if not power.support or is_coboundary(T, power):
            break
        height = m
    return height
