"""Abstract simplicial complexes, with and without a free Z2 involution.

Complexes are stored by their facets only.  Faces are enumerated on demand,
which keeps Vietoris-Rips and sign complexes cheap to hold even though they
have exponentially many faces.

Vertex convention for :class:`Z2Complex`: pair ``j`` (0-based) owns the
vertices ``2j`` (displayed ``"{j+1}+"``) and ``2j+1`` (``"{j+1}-"``).  The
involution is therefore ``v ^ 1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import _gf2
from ._limits import CapExceeded, max_faces

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Malformed complex or violated precondition."""


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def maximal_faces(simplices: Iterable[Iterable[int]]) -> list[Face]:
    """Inclusion-maximal members of a family of vertex sets, sorted."""
    uniq = {tuple(sorted(set(s))) for s in simplices}
    uniq.discard(())
    ordered = sorted(uniq, key=lambda f: (-len(f), f))
    kept: list[Face] = []
    larger: list[int] = []  # masks of kept faces strictly bigger than the current size
    pending: list[int] = []
    size = None
    for f in ordered:
        if len(f) != size:
            larger.extend(pending)
            pending = []
            size = len(f)
        m = _mask(f)
        if not any(m & ~k == 0 for k in larger):
            kept.append(f)
            pending.append(m)
    return sorted(kept, key=lambda f: (len(f), f))


@dataclass(frozen=True, eq=False)
class PlainComplex:
    """A finite abstract simplicial complex given by its facets."""

    n_vertices: int
    facets: tuple[Face, ...]
    labels: tuple[str, ...] | None = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_simplices(cls, n_vertices: int, simplices: Iterable[Iterable[int]], **kw):
        facets = maximal_faces(simplices)
        for f in facets:
            if f[0] < 0 or f[-1] >= n_vertices:
                raise ComplexError(f"facet {f} uses a vertex outside 0..{n_vertices - 1}")
        return cls(n_vertices, tuple(facets), **kw)

    # -- basic queries -------------------------------------------------
    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def vertices(self) -> list[int]:
        """Vertices that lie in some facet."""
        return sorted({v for f in self.facets for v in f})

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def __eq__(self, other):
        if not isinstance(other, PlainComplex):
            return NotImplemented
        return (type(self) is type(other) and self.n_vertices == other.n_vertices
                and set(self.facets) == set(other.facets))

    def __hash__(self):
        return hash((type(self).__name__, self.n_vertices, frozenset(self.facets)))

    def __repr__(self):
        return f"{type(self).__name__}(n_vertices={self.n_vertices}, facets={len(self.facets)}, dim={self.dim})"

    def contains(self, face: Iterable[int]) -> bool:
        m = _mask(face)
        return any(m & ~fm == 0 for fm in self._facet_masks())

    def _facet_masks(self) -> list[int]:
        cached = self.meta.get("_masks")
        if cached is None:
            cached = [_mask(f) for f in self.facets]
            self.meta["_masks"] = cached
        return cached

    def faces(self, max_dim: int | None = None, cap: int | None = None) -> dict[int, list[Face]]:
        """All nonempty faces by dimension (sorted tuples, sorted lists)."""
        top = self.dim if max_dim is None else min(max_dim, self.dim)
        cap = max_faces() if cap is None else cap
        out: dict[int, list[Face]] = {}
        total = 0
        for d in range(top + 1):
            layer: set[Face] = set()
            for f in self.facets:
                if len(f) > d:
                    layer.update(itertools.combinations(f, d + 1))
                    if total + len(layer) > cap:
                        raise CapExceeded(f"more than {cap} faces up to dimension {d}")
            total += len(layer)
            out[d] = sorted(layer)
        return out

    def f_vector(self, max_dim: int | None = None) -> list[int]:
        fs = self.faces(max_dim)
        return [len(fs[d]) for d in sorted(fs)]

    def check(self) -> None:
        """Validate the facet antichain invariant; raises ComplexError."""
        masks = self._facet_masks()
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a & ~b == 0:
                    raise ComplexError(f"facet {self.facets[i]} is contained in {self.facets[j]}")

    def with_facets(self, simplices: Iterable[Iterable[int]]):
        return type(self).from_simplices(self.n_vertices, simplices, labels=self.labels)


class Z2Complex(PlainComplex):
    """Simplicial complex on ``2 * n_pairs`` vertices with the free involution ``v ^ 1``."""

    @classmethod
    def from_simplices(cls, n_vertices: int, simplices: Iterable[Iterable[int]], **kw):
        if n_vertices % 2:
            raise ComplexError("a Z2 complex needs an even number of vertices")
        facets = maximal_faces(simplices)
        fset = set(facets)
        for f in facets:
            if f[-1] >= n_vertices:
                raise ComplexError(f"facet {f} uses a vertex outside 0..{n_vertices - 1}")
            if len({v >> 1 for v in f}) != len(f):
                raise ComplexError(f"facet {f} contains an antipodal pair; the action is not free")
            if tuple(sorted(v ^ 1 for v in f)) not in fset:
                raise ComplexError(f"facet set is not closed under the involution (at {f})")
        return cls(n_vertices, tuple(facets), **kw)

    @classmethod
    def from_pairs(cls, n_pairs: int, simplices: Iterable[Iterable[int]], symmetrize: bool = False, **kw):
        simplices = [tuple(s) for s in simplices]
        if symmetrize:
            simplices = simplices + [tuple(v ^ 1 for v in s) for s in simplices]
        return cls.from_simplices(2 * n_pairs, simplices, **kw)

    @property
    def n_pairs(self) -> int:
        return self.n_vertices // 2

    def label(self, v: int) -> str:
        if self.labels:
            return self.labels[v]
        return vertex_label(v)

    @staticmethod
    def involution(face: Iterable[int]) -> Face:
        return tuple(sorted(v ^ 1 for v in face))


def vertex_label(v: int) -> str:
    return f"{(v >> 1) + 1}{'+' if v % 2 == 0 else '-'}"


def parse_vertex_label(s: str) -> int:
    s = s.strip()
    if len(s) < 2 or s[-1] not in "+-":
        raise ComplexError(f"bad vertex label {s!r}")
    j = int(s[:-1]) - 1
    if j < 0:
        raise ComplexError(f"bad vertex label {s!r}")
    return 2 * j + (s[-1] == "-")


# -- text format ------------------------------------------------------
def to_text(K: PlainComplex) -> str:
    if isinstance(K, Z2Complex):
        lines = [f"pairs {K.n_pairs}"]
        lines += [" ".join(vertex_label(v) for v in f) for f in K.facets]
    else:
        lines = [f"vertices {K.n_vertices}"]
        lines += [" ".join(str(v) for v in f) for f in K.facets]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> PlainComplex:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ComplexError("empty complex file")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("pairs", "vertices"):
        raise ComplexError(f"bad header {lines[0]!r}")
    n = int(head[1])
    if head[0] == "pairs":
        facets = [[parse_vertex_label(t) for t in ln.split()] for ln in lines[1:]]
        return Z2Complex.from_pairs(n, facets)
    facets = [[int(t) for t in ln.split()] for ln in lines[1:]]
    return PlainComplex.from_simplices(n, facets)


def save(K: PlainComplex, path: str | Path) -> None:
    Path(path).write_text(to_text(K))


def load(path: str | Path) -> PlainComplex:
    return from_text(Path(path).read_text())


# -- constructions ----------------------------------------------------
def simplex(n: int) -> PlainComplex:
    """The full simplex on ``n`` vertices."""
    return PlainComplex(n, (tuple(range(n)),))


def crosspolytope_boundary(d: int) -> Z2Complex:
    """Boundary of the d-dimensional crosspolytope: every transversal of the d pairs."""
    if d < 1:
        raise ComplexError("crosspolytope dimension must be >= 1")
    facets = [tuple(2 * j + s for j, s in enumerate(signs))
              for signs in itertools.product((0, 1), repeat=d)]
    return Z2Complex.from_pairs(d, facets)


def deleted_join_simplex(d: int) -> Z2Complex:
    """Deleted join of two copies of the (d-1)-simplex, copies swapped by the involution.

    A face is ``A x {1} u B x {2}`` with ``A``, ``B`` disjoint faces of the
    simplex.  Copy 2 is the ``+`` side of each pair.
    """
    if d < 1:
        raise ComplexError("dimension must be >= 1")
    faces = []
    for assign in itertools.product((None, 1, 2), repeat=d):
        faces.append([(i, c) for i, c in enumerate(assign) if c is not None])
    vid = {(i, 2): 2 * i for i in range(d)} | {(i, 1): 2 * i + 1 for i in range(d)}
    return Z2Complex.from_pairs(d, [[vid[x] for x in f] for f in faces if f])


def skeleton(K: PlainComplex, r: int) -> PlainComplex:
    if r < 0:
        raise ComplexError("skeleton dimension must be >= 0")
    if r >= K.dim:
        return K
    faces = set()
    for f in K.facets:
        if len(f) <= r + 1:
            faces.add(f)
        else:
            faces.update(itertools.combinations(f, r + 1))
    return type(K).from_simplices(K.n_vertices, faces, labels=K.labels)


def join(K: PlainComplex, L: PlainComplex) -> PlainComplex:
    """Join on disjoint vertex sets; L's vertices are shifted by ``K.n_vertices``."""
    off = K.n_vertices
    facets = [f + tuple(v + off for v in g) for f in K.facets for g in L.facets]
    return PlainComplex.from_simplices(K.n_vertices + L.n_vertices, facets)


# -- posets and order complexes ---------------------------------------
@dataclass(frozen=True)
class Poset:
    """Finite poset given by its elements and a ``leq`` predicate."""

    elements: tuple[Hashable, ...]
    leq: Callable[[Hashable, Hashable], bool]

    def covers(self) -> dict[int, list[int]]:
        """Upward cover relation on element indices."""
        n = len(self.elements)
        less = [[i != j and self.leq(self.elements[i], self.elements[j]) for j in range(n)]
                for i in range(n)]
        up: dict[int, list[int]] = {}
        for i in range(n):
            above = [j for j in range(n) if less[i][j]]
            up[i] = [j for j in above if not any(less[i][k] and less[k][j] for k in above)]
        return up


def face_poset(K: PlainComplex) -> Poset:
    faces = [f for d, fs in sorted(K.faces().items()) for f in fs]
    return Poset(tuple(frozenset(f) for f in faces), lambda a, b: a <= b)


def order_complex(P: Poset) -> PlainComplex:
    """Complex of chains of ``P``; vertex ``i`` is ``P.elements[i]``."""
    up = P.covers()
    has_lower = {j for js in up.values() for j in js}
    chains: list[Face] = []

    def extend(path: list[int]):
        nxt = up[path[-1]]
        if not nxt:
            chains.append(tuple(sorted(path)))
            return
        for j in nxt:
            path.append(j)
            extend(path)
            path.pop()

    for i in range(len(P.elements)):
        if i not in has_lower:
            extend([i])
    return PlainComplex.from_simplices(len(P.elements), chains)


def barycentric_subdivision(K: PlainComplex, cap: int | None = None) -> PlainComplex:
    """Order complex of the face poset, built facet by facet.

    For a :class:`Z2Complex` the vertices (faces of ``K``) are grouped into
    orbit pairs: the face whose smallest vertex is a ``+`` vertex is the ``+``
    member.  The induced involution is free and the result is a Z2Complex.
    """
    cap = max_faces() if cap is None else cap
    n_chains = sum(math.factorial(len(f)) for f in K.facets)
    if n_chains > cap:
        raise CapExceeded(f"subdivision would have {n_chains} facets (cap {cap})")
    all_faces = [f for d, fs in sorted(K.faces(cap=cap).items()) for f in fs]
    if isinstance(K, Z2Complex):
        reps = [f for f in all_faces if f[0] % 2 == 0]
        index = {}
        for p, f in enumerate(reps):
            index[f] = 2 * p
            index[Z2Complex.involution(f)] = 2 * p + 1
        labels = [""] * (2 * len(reps))
        for f, i in index.items():
            labels[i] = "{" + ",".join(vertex_label(v) for v in f) + "}"
    else:
        index = {f: i for i, f in enumerate(all_faces)}
        labels = ["{" + ",".join(K.label(v) for v in f) + "}" for f in all_faces]
    chains = []
    for f in K.facets:
        for perm in itertools.permutations(f):
            chains.append(tuple(sorted(index[tuple(sorted(perm[:i + 1]))] for i in range(len(perm)))))
    meta = {"subdivided": True}
    cls = type(K)
    return cls(len(index), tuple(sorted(set(chains), key=lambda c: (len(c), c))),
               labels=tuple(labels), meta=meta)


# -- quotients and double covers --------------------------------------
@dataclass(frozen=True)
class Quotient:
    """Orbit complex of a free Z2 complex plus the class of its double cover.

    ``cocycle`` holds the quotient edges ``(p, q)``, ``p < q``, whose lift
    starting at the ``+`` vertex of orbit ``p`` ends at the ``-`` vertex of
    orbit ``q``.  ``cover`` is the (possibly subdivided) complex that was
    actually quotiented.
    """

    complex: PlainComplex
    cocycle: frozenset[tuple[int, int]]
    subdivided: bool
    cover: Z2Complex


def _collapse_is_injective(K: Z2Complex) -> bool:
    images = set()
    count = 0
    for d, fs in K.faces().items():
        for f in fs:
            if f[0] % 2:
                continue
            count += 1
            images.add(tuple(v >> 1 for v in f))
    return len(images) == count


def quotient(K: Z2Complex) -> Quotient:
    """Quotient by the involution, subdividing once when the collapse is not injective."""
    if not isinstance(K, Z2Complex):
        raise ComplexError("quotient needs a free Z2 complex")
    X, subdivided = K, False
    if not _collapse_is_injective(K):
        X, subdivided = barycentric_subdivision(K), True
    T = PlainComplex.from_simplices(X.n_pairs, [tuple(v >> 1 for v in f) for f in X.facets],
                                    meta={"subdivided": subdivided})
    w = set()
    for a, b in X.faces(max_dim=1).get(1, []):
        # a < b, so a's orbit is the smaller one; its + lift is the canonical start
        if a % 2 == 0 and b % 2 == 1:
            w.add((a >> 1, b >> 1))
    return Quotient(T, frozenset(w), subdivided, X)


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def is_cocycle_1(T: PlainComplex, w: Iterable[tuple[int, int]]) -> bool:
    ws = {_edge(*e) for e in w}
    for tri in T.faces(max_dim=2).get(2, []):
        a, b, c = tri
        if ((a, b) in ws) ^ ((b, c) in ws) ^ ((a, c) in ws):
            return False
    return True


def is_coboundary_1(T: PlainComplex, w: Iterable[tuple[int, int]]) -> bool:
    """Whether the 1-cochain ``w`` equals ``delta x`` for a 0-cochain ``x``."""
    edges = T.faces(max_dim=1).get(1, [])
    eidx = {e: i for i, e in enumerate(edges)}
    cols = [0] * T.n_vertices
    for (a, b), i in eidx.items():
        cols[a] |= 1 << i
        cols[b] |= 1 << i
    target = 0
    for e in w:
        e = _edge(*e)
        if e not in eidx:
            raise ComplexError(f"cochain edge {e} is not an edge of the complex")
        target |= 1 << eidx[e]
    return _gf2.solve(cols, target) is not None


def lift_double_cover(T: PlainComplex, w: Iterable[tuple[int, int]]) -> Z2Complex:
    """Double cover of ``T`` classified by the 1-cocycle ``w``.

    Vertex ``v`` of ``T`` lifts to ``2v`` and ``2v+1``.  A coboundary ``w``
    yields two disjoint copies of ``T``; that case is flagged in ``meta``.
    """
    ws = {_edge(*e) for e in w}
    if not is_cocycle_1(T, ws):
        raise ComplexError("w is not a cocycle (nonzero on some triangle boundary)")
    lifted = []
    for f in T.facets:
        v0 = f[0]
        sheet = {v0: 0}
        for u in f[1:]:
            sheet[u] = 1 if (v0, u) in ws else 0
        lifted.append(tuple(2 * u + sheet[u] for u in f))
    K = Z2Complex.from_pairs(T.n_vertices, lifted, symmetrize=True)
    K.meta["trivial_cover"] = is_coboundary_1(T, ws)
    return K


# -- isomorphism testing -----------------------------------------------
MAX_ISO_PAIRS = 24
MAX_ISO_FACETS = 100_000


def _incidence(K: PlainComplex) -> np.ndarray:
    B = np.zeros((len(K.facets), K.n_vertices), dtype=np.int64)
    for i, f in enumerate(K.facets):
        B[i, list(f)] = 1
    return B


def _find_isomorphism(K1: PlainComplex, K2: PlainComplex, equivariant: bool) -> dict[int, int] | None:
    if K1.n_vertices != K2.n_vertices or len(K1.facets) != len(K2.facets):
        return None
    if sorted(map(len, K1.facets)) != sorted(map(len, K2.facets)):
        return None
    n = K1.n_vertices
    B1, B2 = _incidence(K1), _incidence(K2)
    co1, co2 = B1.T @ B1, B2.T @ B2
    sizes1 = np.array([len(f) for f in K1.facets])
    sizes2 = np.array([len(f) for f in K2.facets])

    def signature(B, sizes, v):
        return tuple(sorted(sizes[B[:, v] == 1].tolist()))

    sig1 = [signature(B1, sizes1, v) for v in range(n)]
    sig2 = [signature(B2, sizes2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    target = {tuple(f) for f in K2.facets}

    # order: start from the busiest vertex, then greedily the most constrained
    order: list[int] = []
    remaining = set(range(n))
    if equivariant:
        remaining = {v for v in remaining if v % 2 == 0}
    while remaining:
        if order:
            v = max(remaining, key=lambda u: (sum(co1[u, w] > 0 for w in order), co1[u, u], -u))
        else:
            v = max(remaining, key=lambda u: (co1[u, u], -u))
        order.append(v)
        remaining.discard(v)
        if equivariant:
            order.append(v ^ 1)
    f: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v, w):
        if sig1[v] != sig2[w] or co1[v, v] != co2[w, w]:
            return False
        for u, fu in f.items():
            if co1[v, u] != co2[w, fu]:
                return False
        return True

    def complete() -> bool:
        return all(tuple(sorted(f[v] for v in face)) in target for face in K1.facets)

    step = 2 if equivariant else 1

    def search(pos: int) -> bool:
        if pos == len(order):
            return complete()
        v = order[pos]
        for w in range(n):
            if w in used:
                continue
            if equivariant and (w ^ 1) in used:
                continue
            if not consistent(v, w):
                continue
            f[v] = w
            used.add(w)
            ok = True
            if equivariant:
                if consistent(v ^ 1, w ^ 1):
                    f[v ^ 1] = w ^ 1
                    used.add(w ^ 1)
                else:
                    ok = False
            if ok and search(pos + step):
                return True
            if equivariant and f.get(v ^ 1) == w ^ 1:
                del f[v ^ 1]
                used.discard(w ^ 1)
            del f[v]
            used.discard(w)
        return False

    return dict(sorted(f.items())) if search(0) else None


def _iso_guard(K1: PlainComplex, K2: PlainComplex) -> None:
    for K in (K1, K2):
        if K.n_vertices > 2 * MAX_ISO_PAIRS or len(K.facets) > MAX_ISO_FACETS:
            raise CapExceeded("isomorphism test limited to 24 pairs and 1e5 facets")


def equivariant_isomorphic(K1: Z2Complex, K2: Z2Complex) -> tuple[bool, dict[int, int] | None]:
    """Search for a simplicial bijection commuting with both involutions."""
    _iso_guard(K1, K2)
    w = _find_isomorphism(K1, K2, equivariant=True)
    return w is not None, w


def isomorphic(K1: PlainComplex, K2: PlainComplex) -> tuple[bool, dict[int, int] | None]:
    """Plain simplicial isomorphism (vertices outside every facet must match in number)."""
    _iso_guard(K1, K2)
    w = _find_isomorphism(K1, K2, equivariant=False)
    return w is not None, w


# -- named complexes ---------------------------------------------------
RP2_6_FACETS: tuple[Face, ...] = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
)


def rp2_6() -> PlainComplex:
    """Six-vertex triangulation of the real projective plane (hemi-icosahedron)."""
    return PlainComplex.from_simplices(6, RP2_6_FACETS)


def relabel(K: PlainComplex, mapping: Sequence[int] | dict[int, int]) -> PlainComplex:
    return type(K).from_simplices(K.n_vertices, [[mapping[v] for v in f] for f in K.facets])
