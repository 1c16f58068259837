"""Vietoris-Rips complexes of the hypercube and the cube-face machinery around them.

Cube vertices are bitstrings stored as ints (coordinate ``x_1`` is the most
significant bit).  Every complex here uses the same vertex ids: ``x`` and its
antipode ``x^c`` form pair ``min(x, x^c)``, with the member whose top bit is
0 playing the ``+`` role::

    id(x) = 2 * min(x, x^c) + (x > x^c)

so the antipodal map is ``id ^ 1``.  Vertex labels are the bitstrings.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from ._limits import CapExceeded, max_faces
from .simplicial import PlainComplex, Z2Complex, maximal_faces

VR_MAX_N = 7
SKELETON_MAX_N = 6


def cube_vertex_id(x: int, n: int) -> int:
    xc = x ^ ((1 << n) - 1)
    return 2 * min(x, xc) + (x > xc)


def cube_vertex(v: int, n: int) -> int:
    """Inverse of :func:`cube_vertex_id`."""
    p = v >> 1
    return p ^ ((1 << n) - 1) if v & 1 else p


def cube_labels(n: int) -> tuple[str, ...]:
    return tuple(format(cube_vertex(v, n), f"0{n}b") for v in range(1 << n))


def _check_n(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the cube size cap {cap}")


def _distance_graph(points: list[int], k: int) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(points)
    for a, b in itertools.combinations(points, 2):
        if (a ^ b).bit_count() <= k:
            G.add_edge(a, b)
    return G


def _cliques(points: list[int], k: int, limit: int) -> list[tuple[int, ...]]:
    out = []
    for c in nx.find_cliques(_distance_graph(points, k)):
        out.append(tuple(sorted(c)))
        if len(out) > limit:
            raise CapExceeded(f"more than {limit} maximal cliques")
    out.sort()
    return out


def _to_complex(n: int, simplices, free: bool, meta: dict) -> PlainComplex:
    faces = [[cube_vertex_id(x, n) for x in s] for s in simplices]
    kw = dict(labels=cube_labels(n), meta={"free": free, **meta})
    if free:
        return Z2Complex.from_simplices(1 << n, faces, **kw)
    return PlainComplex.from_simplices(1 << n, faces, **kw)


def vr_cliques(n: int, k: int, cap: int = VR_MAX_N) -> list[tuple[int, ...]]:
    """Maximal cliques of the Hamming-distance-``<= k`` graph on ``{0,1}^n`` (as bitstrings)."""
    _check_n(n, cap)
    if k < 1:
        raise ValueError("k must be >= 1")
    return _cliques(list(range(1 << n)), k, max_faces())


def vr_cube(n: int, k: int, cap: int = VR_MAX_N) -> PlainComplex:
    """VR(Q_n, k).

    The antipodal map acts freely iff no face holds an antipodal pair, i.e.
    iff ``k < n``; then a :class:`Z2Complex` is returned, otherwise a plain
    complex flagged non-free.
    """
    cl = vr_cliques(n, k, cap)
    return _to_complex(n, cl, free=k < n, meta={"n": n, "k": k})


@dataclass(frozen=True)
class CubeFace:
    """Face of ``[0,1]^n``: coordinates in ``free`` vary, the rest are fixed.

    Coordinates are 0-based positions counted from the most significant bit;
    ``fixed`` is a bitstring that is zero on the free coordinates.
    """

    n: int
    free: frozenset[int]
    fixed: int

    def __post_init__(self):
        if any(not 0 <= i < self.n for i in self.free):
            raise ValueError("free coordinate out of range")
        if self.fixed & self.free_mask:
            raise ValueError("fixed values must be 0 on free coordinates")

    @property
    def dim(self) -> int:
        return len(self.free)

    @property
    def free_mask(self) -> int:
        return sum(1 << (self.n - 1 - i) for i in self.free)

    def vertices(self) -> list[int]:
        bits = [1 << (self.n - 1 - i) for i in sorted(self.free)]
        out = []
        for sub in itertools.product((0, 1), repeat=len(bits)):
            out.append(self.fixed | sum(b for b, s in zip(bits, sub) if s))
        return sorted(out)

    def contains(self, x: int) -> bool:
        return (x & ~self.free_mask) == self.fixed


def cube_faces(n: int, t: int) -> list[CubeFace]:
    """All ``t``-dimensional faces, ordered by (free set, fixed bits)."""
    out = []
    for free in itertools.combinations(range(n), t):
        rest = [i for i in range(n) if i not in free]
        for vals in itertools.product((0, 1), repeat=len(rest)):
            fixed = sum(1 << (n - 1 - i) for i, b in zip(rest, vals) if b)
            out.append(CubeFace(n, frozenset(free), fixed))
    return out


def _staircases(face: CubeFace) -> list[tuple[int, ...]]:
    bits = [1 << (face.n - 1 - i) for i in sorted(face.free)]
    chains = []
    for perm in itertools.permutations(bits):
        x = face.fixed
        chain = [x]
        for b in perm:
            x |= b
            chain.append(x)
        chains.append(tuple(chain))
    return chains


def hypercube_skeleton_triangulated(n: int, t: int, cap: int = SKELETON_MAX_N) -> PlainComplex:
    """The union of all ``t``-faces of ``[0,1]^n``, each triangulated by its staircases.

    A staircase is a maximal chain in the componentwise order on a face; the
    antipodal map reverses the order, so it maps staircases to staircases.
    Free for ``t < n``; the solid cube (``t = n``) is returned as a plain
    complex flagged non-free.
    """
    _check_n(n, cap)
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}")
    simplices = [c for F in cube_faces(n, t) for c in _staircases(F)]
    return _to_complex(n, simplices, free=t < n, meta={"n": n, "t": t})


def vr_t_subcomplex(n: int, k: int, t: int, cap: int = VR_MAX_N) -> PlainComplex:
    """Faces of VR(Q_n, k) that lie inside a single ``t``-face of the cube."""
    _check_n(n, cap)
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}")
    limit = max_faces()
    simplices: list[tuple[int, ...]] = []
    for F in cube_faces(n, t):
        simplices.extend(_cliques(F.vertices(), k, limit))
        if len(simplices) > limit:
            raise CapExceeded(f"more than {limit} candidate facets")
    return _to_complex(n, maximal_faces(simplices), free=k < n, meta={"n": n, "k": k, "t": t})


def face_cover_nerve(n: int, k: int, t: int, cap: int = VR_MAX_N) -> PlainComplex:
    """Nerve of the cover of VR^t(Q_n, k) by the restrictions to ``t``-faces.

    Nerve vertex ``i`` is ``cube_faces(n, t)[i]``.  The restrictions to a set of
    faces intersect iff the faces share a cube vertex, so the facets are the
    sets of ``t``-faces through each cube vertex; ``k`` does not enter.
    """
    _check_n(n, cap)
    faces = cube_faces(n, t)
    simplices = [[i for i, F in enumerate(faces) if F.contains(x)] for x in range(1 << n)]
    return PlainComplex.from_simplices(len(faces), simplices, meta={"n": n, "k": k, "t": t})


# -- quantitative helpers ----------------------------------------------
def alpha(n: int, k: int) -> Fraction:
    """``2^(n-1) / sum_{i=k+1}^n C(n, i)``."""
    if not 0 <= k < n:
        raise ValueError(f"alpha needs 0 <= k < n, got n={n}, k={k}")
    return Fraction(2 ** (n - 1), sum(math.comb(n, i) for i in range(k + 1, n + 1)))


def _t_ok(t: int, k: int) -> bool:
    return k > t / 2 + 2 * math.sqrt(t * math.log(t))


def choose_t(k: int) -> int:
    """Largest ``t >= 2`` with ``k > t/2 + 2 sqrt(t ln t)``; 1 if there is none."""
    if k < 2:
        raise ValueError("choose_t needs k >= 2")
    best = 1
    t = 2
    while t < 2 * k:  # beyond this t/2 alone reaches k
        if _t_ok(t, k):
            best = t
        t += 1
    return best


@dataclass(frozen=True)
class TailCheck:
    ok: bool
    margins: dict[int, Fraction]  # t' -> alpha(t', k) - (t + 1)


def tail_inequality_check(t: int, k: int) -> TailCheck:
    """Check ``alpha(t', k) >= t + 1`` exactly for every ``t'`` in ``(k, t]``."""
    if not 2 <= t <= 40:
        raise ValueError("tail check is limited to 2 <= t <= 40")
    margins = {tp: alpha(tp, k) - (t + 1) for tp in range(k + 1, t + 1)}
    return TailCheck(all(m >= 0 for m in margins.values()), margins)


def hamming_diameter(points) -> int:
    """Largest pairwise Hamming distance (0 for fewer than two points)."""
    return max(((a ^ b).bit_count() for a, b in itertools.combinations(points, 2)), default=0)
