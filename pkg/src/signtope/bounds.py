"""The bound chain  VC - 1 <= coind <= swh <= ind <= srank - 1  and its witnesses.

Everything that certifies a sign condition is checked in exact rational
arithmetic.  Floating point only appears inside :func:`srank_upper_search`,
whose output is re-verified exactly before it is returned.
"""

from __future__ import annotations

import datetime as _dt
import hashlib
import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import __version__, gf2top
from ._height import DEFAULT_MAX_SETS, longest_chain
from ._limits import CapExceeded
from .exactlp import separate_origin
from .signcomplex import matrix_from_complex, sign_complex, signed_support
from .signmat import MINUS, PLUS, STAR, PartialSignMatrix
from .simplicial import Face, Z2Complex

EXACT_MAX_COLS = 24
SCHEMA_VERSION = 1


class RealizationError(ValueError):
    """A realization or linear map fails a sign condition."""

    def __init__(self, msg: str, where=None):
        super().__init__(msg)
        self.where = where


# -- shattering ----------------------------------------------------------
def _shatter_levels(A: PartialSignMatrix, antipodal: bool, max_size: int | None = None):
    """Level-wise search for column sets shattered by the rows.

    A set is shattered when every sign pattern on it (up to global sign if
    ``antipodal``) appears as a Star-free row restriction.  Subsets of a
    shattered set are shattered, so candidates at size ``d+1`` are built from
    size-``d`` survivors.  Yields ``(size, list of shattered sets)``.
    """
    E = A.entries
    n = A.n_cols
    level = [(j,) for j in range(n)]
    size = 1
    known: set[tuple[int, ...]] = set()
    while level:
        need = 2 ** (size - 1) if antipodal else 2 ** size
        if need > A.n_rows:
            return
        weights = 1 << np.arange(size, dtype=np.int64)
        survivors = []
        for S in level:
            sub = E[:, S]
            ok = (sub != STAR).all(axis=1)
            if ok.sum() < need:
                continue
            bits = (sub[ok] == MINUS).astype(np.int64)
            if antipodal:
                bits ^= bits[:, :1]  # normalise so the first column is Plus
            if len(np.unique(bits @ weights)) == need:
                survivors.append(S)
        if not survivors:
            return
        yield size, survivors
        if max_size is not None and size >= max_size:
            return
        known = set(survivors)
        nxt = []
        for S in survivors:
            for j in range(S[-1] + 1, n):
                T = S + (j,)
                if all(T[:i] + T[i + 1:] in known for i in range(size)):
                    nxt.append(T)
        level = nxt
        size += 1


def vc_dimension(A: PartialSignMatrix, max_cols: int = EXACT_MAX_COLS) -> int:
    """Largest column set on which all ``2^|S|`` sign patterns occur (Star matches nothing)."""
    if A.n_cols > max_cols:
        raise CapExceeded(f"exact VC search limited to {max_cols} columns, got {A.n_cols}")
    best = 0
    for size, _ in _shatter_levels(A, antipodal=False):
        best = size
    return best


@dataclass(frozen=True)
class OmegaResult:
    value: int
    exact: bool
    witness: tuple[int, ...]  # column set (0-based)


def _as_matrix(obj) -> PartialSignMatrix:
    if isinstance(obj, PartialSignMatrix):
        return obj
    if isinstance(obj, Z2Complex):
        return matrix_from_complex(obj)
    raise TypeError("expected a PartialSignMatrix or a Z2Complex")


def _antipodally_shattered(E: np.ndarray, S: Sequence[int]) -> bool:
    sub = E[:, list(S)]
    ok = (sub != STAR).all(axis=1)
    bits = (sub[ok] == MINUS).astype(np.int64)
    if not len(bits):
        return False
    bits ^= bits[:, :1]
    return len(np.unique(bits @ (1 << np.arange(len(S), dtype=np.int64)))) == 2 ** (len(S) - 1)


def omega_diamond(obj, max_cols: int = EXACT_MAX_COLS) -> OmegaResult:
    """Largest ``d`` such that some ``d`` columns see every sign pattern up to global sign.

    Equivalently the largest crosspolytope boundary sitting in the sign
    complex on a set of pairs with all transversal faces present.  Accepts a
    matrix or a free Z2 complex.  Beyond ``max_cols`` columns a greedy search
    gives a lower bound and ``exact`` is False.
    """
    A = _as_matrix(obj)
    if A.n_cols <= max_cols:
        best: tuple[int, ...] = ()
        for _, sets in _shatter_levels(A, antipodal=True):
            best = sets[0]
        return OmegaResult(len(best), True, best)
    E = A.entries
    S = [int(np.argmax((E != STAR).sum(axis=0)))]
    for j in range(A.n_cols):
        if j not in S and _antipodally_shattered(E, S + [j]):
            S.append(j)
    return OmegaResult(len(S), False, tuple(sorted(S)))


# -- chain height ----------------------------------------------------------
def _column_generators(A: PartialSignMatrix) -> list[int]:
    return [m for pair in A.row_masks() for m in pair if m]


def chain_height(A: PartialSignMatrix, max_sets: int = DEFAULT_MAX_SETS) -> int:
    """Longest strict chain in the intersection closure of the ``R_i^+``, ``R_i^-``.

    ``R_i^+`` (``R_i^-``) is the set of columns where row ``i`` is Plus (Minus);
    empty sets are not members of the closure.
    """
    h, _ = longest_chain(_column_generators(A), A.n_cols, max_sets)
    return h


def ind_upper_chain_height(A: PartialSignMatrix, max_sets: int = DEFAULT_MAX_SETS) -> int:
    return 2 * chain_height(A, max_sets) - 1


def _vertex_mask(face: Face) -> int:
    return sum(1 << v for v in face)


def phi_image_dimension(A: PartialSignMatrix, max_sets: int = DEFAULT_MAX_SETS) -> int:
    """Dimension of the order complex of the nonempty intersections of facets of S(A).

    Every face ``X`` is sent to the intersection of the facets containing it;
    the image is exactly the family of nonempty facet intersections, and the
    dimension of its order complex is its longest chain minus one.
    """
    # only facets count: a row support absorbed by a larger one is not a facet
    gens = [_vertex_mask(f) for f in sign_complex(A).facets]
    h, _ = longest_chain(gens, 2 * A.n_cols, max_sets)
    return h - 1


# -- index upper bounds -------------------------------------------------------
@dataclass(frozen=True)
class IncidenceWitness:
    """Vertex-facet incidence graph carrying the induced involution."""

    n_vertices: int
    n_facets: int
    n_edges: int
    free: bool


def facet_intersection_index_bound(K: Z2Complex) -> tuple[int, IncidenceWitness] | None:
    """``(1, witness)`` if any two facets share at most one vertex, else None."""
    if not isinstance(K, Z2Complex):
        raise TypeError("facet_intersection_index_bound needs a free Z2 complex")
    seen: set[tuple[int, int]] = set()
    for f in K.facets:
        for e in itertools.combinations(f, 2):
            if e in seen:
                return None
            seen.add(e)
    fidx = {f: i for i, f in enumerate(K.facets)}
    verts = K.vertices()
    edges = [(v, fidx[f]) for f in K.facets for v in f]
    free = all(v ^ 1 != v for v in verts)
    free &= all(fidx[Z2Complex.involution(f)] != i for f, i in fidx.items())
    free &= all((v ^ 1, fidx[Z2Complex.involution(K.facets[i])]) != (v, i) for v, i in edges)
    return 1, IncidenceWitness(len(verts), len(K.facets), len(edges), free)


# -- coindex lower bound --------------------------------------------------------
@dataclass(frozen=True)
class CoindBound:
    value: int
    provenance: str  # "crosspolytope" or "homological"
    crosspolytope: int
    homological: int | None


def coind_lower(K, split_joins: bool = True) -> CoindBound:
    """max(omega_diamond - 1, homological connectivity + 1).

    The homological value is capped at ``dim K``.  Accepts a matrix (its sign
    complex is used) or a free Z2 complex.
    """
    if isinstance(K, PartialSignMatrix):
        A, K = K, sign_complex(K)
    else:
        A = _as_matrix(K)
    cross = omega_diamond(A).value - 1
    try:
        hom = min(gf2top.homological_connectivity(K, split_joins=split_joins) + 1, K.dim)
    except CapExceeded:
        hom = None
    if hom is not None and hom > cross:
        return CoindBound(hom, "homological", cross, hom)
    return CoindBound(cross, "crosspolytope", cross, hom)


# -- realizations -------------------------------------------------------------
def _fracs(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class Realization:
    """Row vectors ``u_i`` and column vectors ``v_j`` in Q^d."""

    d: int
    rows: tuple[tuple[Fraction, ...], ...]
    cols: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(_fracs(u) for u in self.rows))
        object.__setattr__(self, "cols", tuple(_fracs(v) for v in self.cols))
        if any(len(u) != self.d for u in self.rows + self.cols):
            raise ValueError(f"all vectors must have length d={self.d}")

    def gram(self) -> np.ndarray:
        """Exact ``<u_i, v_j>`` as an object array of Fractions."""
        U = np.array(self.rows, dtype=object).reshape(len(self.rows), self.d)
        V = np.array(self.cols, dtype=object).reshape(len(self.cols), self.d)
        return U.dot(V.T)

    def to_json(self) -> dict:
        s = lambda v: [str(x) for x in v]  # noqa: E731
        return {"d": self.d, "rows": [s(u) for u in self.rows], "cols": [s(v) for v in self.cols]}

    @classmethod
    def from_json(cls, obj: dict) -> Realization:
        return cls(obj["d"], [[Fraction(x) for x in u] for u in obj["rows"]],
                   [[Fraction(x) for x in v] for v in obj["cols"]])


def verify_realization(A: PartialSignMatrix, R: Realization) -> tuple[bool, tuple[int, int] | None]:
    """Exact check of ``sign <u_i, v_j> = A_ij`` on non-Star entries; zero counts as a violation."""
    if len(R.rows) != A.n_rows or len(R.cols) != A.n_cols:
        raise ValueError(f"realization shape {len(R.rows)}x{len(R.cols)} does not match {A.shape}")
    G = R.gram()
    for i, j in zip(*np.nonzero(A.entries != STAR)):
        g = G[i, j]
        if g == 0 or (g > 0) != (A.entries[i, j] == PLUS):
            return False, (int(i), int(j))
    return True, None


def ghd_projection_realization(n: int, k: int) -> Realization:
    """Keep the first ``2k+1`` coordinates of the +-1 encoding of every bitstring."""
    d = 2 * k + 1
    if d > n:
        raise ValueError(f"projection needs 2k+1 <= n, got n={n}, k={k}")
    vecs = [tuple(-1 if (x >> (n - 1 - c)) & 1 else 1 for c in range(d)) for x in range(1 << n)]
    return Realization(d, vecs, vecs)


@dataclass(frozen=True)
class OriginAvoidanceCertificate:
    """Per facet of S(A), a vector strictly positive on the images of its vertices."""

    facets: tuple[Face, ...]
    witnesses: tuple[tuple[Fraction, ...], ...]

    def check(self, g: np.ndarray) -> Face | None:
        """First facet whose witness fails on the map ``g`` (d x N), or None."""
        for f, u in zip(self.facets, self.witnesses):
            for v in f:
                img = _vertex_image(g, v)
                if sum((a * b for a, b in zip(u, img)), Fraction(0)) <= 0:
                    return f
        return None


def _vertex_image(g: np.ndarray, v: int) -> list[Fraction]:
    col = [Fraction(x) for x in g[:, v >> 1]]
    return [-x for x in col] if v & 1 else col


def _facet_rows(A: PartialSignMatrix) -> list[tuple[Face, int, int]]:
    """For each facet of S(A): (facet, generating row, +1 or -1)."""
    K = sign_complex(A)
    first: dict[Face, tuple[int, int]] = {}
    for i, s in enumerate(K.meta["row_supports"]):
        first.setdefault(s, (i, 1))
        first.setdefault(Z2Complex.involution(s), (i, -1))
    return [(f, *first[f]) for f in K.facets]


def realization_to_linear_map(A: PartialSignMatrix, R: Realization) -> tuple[np.ndarray, OriginAvoidanceCertificate]:
    """``g(e_j) = v_j``; facet ``sigma_r^+-`` is certified by ``+-u_r``."""
    g = np.array(R.cols, dtype=object).T.reshape(R.d, A.n_cols)
    facets, wits = [], []
    for f, r, s in _facet_rows(A):
        facets.append(f)
        wits.append(tuple(s * x for x in R.rows[r]))
    cert = OriginAvoidanceCertificate(tuple(facets), tuple(wits))
    bad = cert.check(g)
    if bad is not None:
        raise RealizationError(f"origin-avoidance fails on facet {bad}", where=bad)
    return g, cert


def linear_map_to_realization(A: PartialSignMatrix, g) -> Realization:
    """Recover row vectors from a linear map that keeps every facet image off the origin.

    Each row's vector comes from an exact separating hyperplane for the
    images of its signed support (see :mod:`signtope.exactlp`).
    """
    g = np.array([[Fraction(x) for x in row] for row in np.asarray(g, dtype=object)], dtype=object)
    if g.ndim != 2 or g.shape[1] != A.n_cols:
        raise ValueError(f"map must be d x {A.n_cols}")
    d = g.shape[0]
    rows = []
    for r, row in enumerate(A.entries):
        f = signed_support(row)
        sep = separate_origin([_vertex_image(g, v) for v in f])
        if not sep.separated:
            raise RealizationError(f"0 lies in the hull of the image of facet {f} (row {r})", where=f)
        rows.append(sep.u)
    R = Realization(d, rows, [tuple(g[:, j]) for j in range(A.n_cols)])
    ok, where = verify_realization(A, R)
    if not ok:
        raise RealizationError(f"recovered realization fails at {where}", where=where)
    return R


def trivial_realization(A: PartialSignMatrix) -> Realization:
    """``v_j = e_j`` and ``u_i`` = row ``i`` with Star read as 0; always valid in dimension N."""
    n = A.n_cols
    cols = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    return Realization(n, [tuple(int(x) for x in row) for row in A.entries], cols)


def _max_margin(M: np.ndarray, signs: np.ndarray) -> tuple[np.ndarray, float]:
    """Maximise t subject to ``signs_j <x, M_j> >= t``, ``-1 <= x <= 1``."""
    from scipy.optimize import linprog

    d = M.shape[1]
    if not len(signs):
        return np.ones(d), 1.0
    c = np.zeros(d + 1)
    c[-1] = -1.0
    A_ub = np.hstack([-(signs[:, None] * M), np.ones((len(signs), 1))])
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(len(signs)),
                  bounds=[(-1, 1)] * d + [(None, 1)], method="highs")
    if res.status != 0:
        return np.zeros(d), -1.0
    return res.x[:d], float(res.x[-1])


def _rationalize(X: np.ndarray, denom: int) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(float(x)).limit_denominator(denom) for x in row) for row in X]


def _logistic_fit(E: np.ndarray, M: np.ndarray, d: int, x0: np.ndarray, maxiter: int) -> tuple[np.ndarray, np.ndarray]:
    """Minimise sum of softplus(1 - A_ij <u_i, v_j>) over non-Star entries (plus a small ridge)."""
    from scipy.optimize import minimize

    m, n = E.shape
    reg = 1e-3

    def f(x):
        U = x[: m * d].reshape(m, d)
        V = x[m * d:].reshape(n, d)
        Z = E * (U @ V.T)
        loss = (np.logaddexp(0, 1 - Z) * M).sum() + reg / 2 * (x @ x)
        S = -np.exp(-np.logaddexp(0, Z - 1)) * M * E  # derivative w.r.t. <u_i, v_j>
        grad = np.concatenate([(S @ V + reg * U).ravel(), (S.T @ U + reg * V).ravel()])
        return loss, grad

    res = minimize(f, x0, jac=True, method="L-BFGS-B", options={"maxiter": maxiter})
    return res.x[: m * d].reshape(m, d), res.x[m * d:].reshape(n, d)


def _polish(E: np.ndarray, mask: np.ndarray, U: np.ndarray, V: np.ndarray, rounds: int) -> np.ndarray | None:
    """Alternating max-margin LPs; returns U once every row is strictly separated."""
    for _ in range(rounds):
        worst = np.inf
        for i in range(E.shape[0]):
            js = np.flatnonzero(mask[i])
            U[i], t = _max_margin(V[js], E[i, js])
            worst = min(worst, t)
        if worst > 1e-9:
            return U
        for j in range(E.shape[1]):
            is_ = np.flatnonzero(mask[:, j])
            V[j], _ = _max_margin(U[is_], E[is_, j])
    return None


def srank_upper_search(A: PartialSignMatrix, d_max: int, seed: int = 0, iters: int = 3,
                       restarts: int = 4, d_min: int = 1, denom: int = 10 ** 6,
                       maxiter: int = 2000) -> Realization | None:
    """Heuristic search for a realization of dimension at most ``d_max``.

    For each ``d`` from ``d_min`` up, a masked logistic factorisation
    ``A ~ sign(U V^T)`` is fitted from random starts; near misses get up to
    ``iters`` rounds of alternating max-margin LPs (rows, then columns).
    Candidates are rounded to rationals and verified exactly.  None means
    nothing was found, not that no realization exists.
    """
    if d_max >= A.n_cols:
        return trivial_realization(A)
    E = A.entries.astype(np.float64)
    mask = A.entries != STAR
    M = mask.astype(np.float64)
    m, n = E.shape
    rng = np.random.Generator(np.random.PCG64(seed))
    for d in range(max(1, d_min), d_max + 1):
        for _ in range(restarts):
            U, V = _logistic_fit(E, M, d, rng.standard_normal((m + n) * d), maxiter)
            if (E * (U @ V.T))[mask].min() <= 0:
                U = _polish(E, mask, U, V, iters)
                if U is None:
                    continue
            R = Realization(d, _rationalize(U, denom), _rationalize(V, denom))
            if verify_realization(A, R)[0]:
                return R
    return None


# -- report --------------------------------------------------------------------
def instance_id(A: PartialSignMatrix) -> str:
    src = dict(A.source)
    fam = src.pop("family", None)
    if fam:
        return f"{fam}(" + ",".join(f"{k}={v}" for k, v in sorted(src.items())) + ")"
    return "matrix:" + hashlib.sha1(A.to_text().encode()).hexdigest()[:10]


@dataclass(frozen=True)
class ReportConfig:
    components: frozenset[str] = frozenset({"vc", "omega", "coind", "swh", "height", "phi", "incidence", "srank"})
    max_sets: int = DEFAULT_MAX_SETS
    search_d_max: int = 6
    search_iters: int = 3
    search_seed: int = 0


@dataclass
class InvariantReport:
    instance: str
    shape: tuple[int, int]
    params: dict
    values: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    ind_bounds: dict = field(default_factory=dict)
    unavailable: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)  # the VC / coind / ind / srank chain
    side_checks: list = field(default_factory=list)  # sandwich and height consistency, informational
    srank_witness: dict | None = None
    started: str = ""
    finished: str = ""

    @property
    def chain_ok(self) -> bool:
        return all(c["holds"] for c in self.checks)

    def get(self, key):
        return self.values.get(key)

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            return x

        return enc({
            "schema": SCHEMA_VERSION,
            "version": __version__,
            "instance": self.instance,
            "shape": list(self.shape),
            "params": self.params,
            "values": self.values,
            "provenance": self.provenance,
            "ind_bounds": self.ind_bounds,
            "unavailable": self.unavailable,
            "checks": self.checks,
            "chain_ok": self.chain_ok,
            "side_checks": self.side_checks,
            "srank_witness": self.srank_witness,
            "timings_s": self.timings,
            "started": self.started,
            "finished": self.finished,
        })

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def invariant_report(A: PartialSignMatrix, config: ReportConfig | None = None) -> InvariantReport:
    """Compute every selected bound, record failures as unavailable, and check the chain."""
    cfg = config or ReportConfig()
    rep = InvariantReport(instance_id(A), A.shape, dict(A.source), started=_now())
    want = cfg.components

    def run(name: str, fn: Callable):
        if name not in want:
            return None
        t0 = time.perf_counter()
        try:
            return fn()
        except (CapExceeded, MemoryError, RecursionError) as exc:
            rep.unavailable[name] = f"{type(exc).__name__}: {exc}"
            return None
        finally:
            rep.timings[name] = round(time.perf_counter() - t0, 4)

    K = sign_complex(A)
    rep.values["n_facets"] = len(K.facets)
    rep.values["dim"] = K.dim
    vc = run("vc", lambda: vc_dimension(A))
    om = run("omega", lambda: omega_diamond(A))
    cb = run("coind", lambda: coind_lower(K))
    sw = run("swh", lambda: gf2top.swh(K))
    h = run("height", lambda: chain_height(A, cfg.max_sets))
    phi = run("phi", lambda: phi_image_dimension(A, cfg.max_sets))
    inc = run("incidence", lambda: facet_intersection_index_bound(K))
    real = run("srank", lambda: _best_realization(A, cfg, d_min=vc or 1))

    v = rep.values
    if vc is not None:
        v["vc"] = vc
    if om is not None:
        v["omega_diamond"] = om.value
        rep.provenance["omega_diamond"] = "exact" if om.exact else "greedy lower bound"
    if cb is not None:
        v["coind_lb"] = cb.value
        rep.provenance["coind_lb"] = cb.provenance
    if sw is not None:
        v["swh"] = sw
    if h is not None:
        v["h"] = h
        rep.ind_bounds["2h-1"] = 2 * h - 1
    if phi is not None:
        v["phi_image_dim"] = phi
    rep.ind_bounds["dimension"] = K.dim
    if inc is not None:
        rep.ind_bounds["incidence-graph"] = inc[0]
    if real is not None:
        R, how = real
        v["srank_ub"] = R.d
        rep.provenance["srank_ub"] = how
        rep.srank_witness = R.to_json()
        rep.ind_bounds["linear"] = R.d - 1
    if rep.ind_bounds:
        best = min(rep.ind_bounds.items(), key=lambda kv: kv[1])
        v["ind_ub"] = best[1]
        rep.provenance["ind_ub"] = best[0]
    if h is not None:
        v["ind_ub_chain_height"] = 2 * h - 1

    def check(label, lhs, rhs, holds, into=None):
        (rep.checks if into is None else into).append({"check": label, "lhs": lhs, "rhs": rhs, "holds": bool(holds)})

    if vc is not None and cb is not None:
        check("vc-1 <= coind_lb", vc - 1, cb.value, vc - 1 <= cb.value)
    if cb is not None and sw is not None:
        check("coind_lb <= swh", cb.value, sw, cb.value <= sw)
    if sw is not None:
        for name, b in rep.ind_bounds.items():
            check(f"swh <= ind_ub[{name}]", sw, b, sw <= b)
    if cb is not None:
        for name, b in rep.ind_bounds.items():
            check(f"coind_lb <= ind_ub[{name}]", cb.value, b, cb.value <= b)
    if "ind_ub" in v and real is not None:
        check("ind_ub <= srank_ub-1", v["ind_ub"], real[0].d - 1, v["ind_ub"] <= real[0].d - 1)
    if vc is not None and real is not None:
        check("vc <= srank_ub", vc, real[0].d, vc <= real[0].d)
    if vc is not None and om is not None and om.exact:
        side = rep.side_checks
        check("omega/2 <= vc", Fraction(om.value, 2), vc, Fraction(om.value, 2) <= vc, side)
        check("floor(omega/2) <= vc", om.value // 2, vc, om.value // 2 <= vc, side)
        check("vc <= omega", vc, om.value, vc <= om.value, side)
    if om is not None and cb is not None:
        check("omega <= coind_lb+1", om.value, cb.value + 1, om.value <= cb.value + 1, rep.side_checks)
    if phi is not None and h is not None:
        check("phi_dim <= 2h-1", phi, 2 * h - 1, phi <= 2 * h - 1, rep.side_checks)
    rep.finished = _now()
    return rep


def _best_realization(A: PartialSignMatrix, cfg: ReportConfig, d_min: int = 1) -> tuple[Realization, str]:
    src = A.source
    if src.get("family") == "ghd" and 2 * src["k"] + 1 <= src["n"]:
        R = ghd_projection_realization(src["n"], src["k"])
        if verify_realization(A, R)[0]:
            return R, "ghd-projection"
    d_max = min(cfg.search_d_max, A.n_cols - 1)
    if d_max >= 1:
        R = srank_upper_search(A, d_max, seed=cfg.search_seed, iters=cfg.search_iters, d_min=d_min)
        if R is not None:
            return R, "search"
    return trivial_realization(A), "trivial"
