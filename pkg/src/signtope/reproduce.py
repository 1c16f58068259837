"""Desk-scale reproduction suite: one function per acceptance check.

Each check returns a list of :class:`Row`; a suite passes when every row
passes and each check finishes inside its time budget.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import bounds, gf2top, signcomplex, simplicial, vrcube
from .signmat import PartialSignMatrix, ghd, hadamard, pg_random_partial, random_total, transpose


@dataclass(frozen=True)
class Row:
    check: str
    item: str
    expected: str
    computed: str
    ok: bool


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    rows: list[Row]
    seconds: float
    budget: float

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and self.seconds <= self.budget


def corpus() -> list[PartialSignMatrix]:
    """Every generator at its two smallest settings, plus a few larger instances."""
    return [
        ghd(3, 1), ghd(4, 1),
        hadamard(1), hadamard(2),
        random_total(1, 0), random_total(2, 0),
        pg_random_partial(2, 0), pg_random_partial(3, 0),
        random_total(6, 0), random_total(8, 1), hadamard(3),
    ]


def _row(check, item, expected, computed, ok=None) -> Row:
    return Row(check, item, str(expected), str(computed), expected == computed if ok is None else bool(ok))


def check_hadamard_height() -> list[Row]:
    return [_row("h(H)", f"n={n}", n + 1, bounds.chain_height(hadamard(n))) for n in range(1, 5)]


def check_hadamard_vc() -> list[Row]:
    return [_row("vc(H)", f"n={n}", n, bounds.vc_dimension(hadamard(n))) for n in range(1, 4)]


GHD_PROJECTION_CASES = [(4, 1), (5, 1), (5, 2), (6, 2), (7, 3)]


def check_ghd_projection() -> list[Row]:
    rows = []
    for n, k in GHD_PROJECTION_CASES:
        R = bounds.ghd_projection_realization(n, k)
        ok, where = bounds.verify_realization(ghd(n, k), R)
        rows.append(_row("projection verifies", f"ghd({n},{k}) d={R.d}", True, ok))
    return rows


def check_round_trip() -> list[Row]:
    cases = [(ghd(n, k), bounds.ghd_projection_realization(n, k)) for n, k in GHD_PROJECTION_CASES]
    H = hadamard(2)
    R = bounds.srank_upper_search(H, 3) or bounds.trivial_realization(H)
    cases.append((H, R))
    rows = []
    for A, R in cases:
        try:
            g, cert = bounds.realization_to_linear_map(A, R)
            R2 = bounds.linear_map_to_realization(A, g)
            ok = bounds.verify_realization(A, R2)[0] and R2.d == R.d and cert.check(g) is None
            got = f"d={R2.d}, verified={ok}"
        except bounds.RealizationError as exc:
            ok, got = False, str(exc)
        rows.append(_row("round trip", bounds.instance_id(A), f"d={R.d}, verified=True", got, ok))
    return rows


def nerve_cases(n_random: int = 50) -> list[PartialSignMatrix]:
    cases = [hadamard(1), hadamard(2)]
    for s in range(n_random):
        rng = np.random.Generator(np.random.PCG64(s))
        cases.append(PartialSignMatrix(np.where(rng.integers(0, 2, size=(5, 6)) == 0, 1, -1),
                                       source={"family": "random5x6", "seed": s}))
    return cases


def check_nerve_transpose() -> list[Row]:
    rows = []
    for A in nerve_cases():
        ok, _ = simplicial.equivariant_isomorphic(signcomplex.row_cover_nerve(A), signcomplex.sign_complex(transpose(A)))
        rows.append(_row("nerve ~ S(A^t)", bounds.instance_id(A), True, ok))
    return rows


def check_vc_omega() -> list[Row]:
    rows = []
    for A in corpus():
        vc = bounds.vc_dimension(A)
        om = bounds.omega_diamond(A).value
        rows.append(_row("omega/2 <= vc <= omega", bounds.instance_id(A), "holds",
                         f"vc={vc}, omega={om}", om <= 2 * vc and vc <= om))
        # the provable form; differs from the line above only for odd omega
        rows.append(_row("floor(omega/2) <= vc <= omega", bounds.instance_id(A), "holds",
                         f"vc={vc}, omega={om}", om // 2 <= vc <= om))
    return rows


def check_vr_identities() -> list[Row]:
    rows = []
    K = vrcube.vr_cube(3, 2)
    iso, _ = simplicial.equivariant_isomorphic(K, simplicial.crosspolytope_boundary(4))
    rows.append(_row("VR(Q3,2) ~ cross-polytope boundary", "n=3,k=2", True, iso))
    rows.append(_row("betti", "VR(Q3,2)", [0, 0, 0, 1], gf2top.betti(K)))
    for n in (3, 4):
        b = gf2top.betti(vrcube.vr_cube(n, 1), 1)
        rows.append(_row("beta1", f"VR(Q{n},1)", n * 2 ** (n - 1) - 2 ** n + 1, b[1]))
    rows.append(_row("contractible", "VR(Q2,2)", [0, 0, 0, 0], gf2top.betti(vrcube.vr_cube(2, 2))))
    return rows


def check_vr_connectivity() -> list[Row]:
    rows = []
    for n in range(1, 6):
        for k in range(1, n):
            a = vrcube.alpha(n, k)
            if a < 2:
                continue
            top = math.floor(a) - 2
            b = gf2top.betti(vrcube.vr_cube(n, k), top)
            rows.append(_row("betti vanish through alpha-2", f"n={n},k={k},alpha={a}", [0] * (top + 1), b))
    return rows


def check_nerve_pipeline() -> list[Row]:
    rows = []
    for n, t in [(3, 2), (4, 2), (4, 3)]:
        H = vrcube.hypercube_skeleton_triangulated(n, t)
        N = vrcube.face_cover_nerve(n, 2, t)
        top = max(H.dim, N.dim)
        rows.append(_row("nerve homology = skeleton homology", f"n={n},t={t}",
                         gf2top.betti(H, top), gf2top.betti(N, top)))
    for n, k in [(3, 1), (3, 2), (4, 1), (4, 2)]:
        same = vrcube.vr_t_subcomplex(n, k, n).facets == vrcube.vr_cube(n, k).facets
        rows.append(_row("VR^n = VR", f"n={n},k={k}", True, same))
    return rows


def check_ghd_map() -> list[Row]:
    rows = []
    for n, k in [(3, 1), (4, 1), (5, 2)]:
        res = signcomplex.ghd_vertex_map_check(n, k)
        rows.append(_row("vertex map lands in facets", f"n={n},k={k} ({res.checked} facets)", True, res.ok))
    return rows


def check_projective() -> list[Row]:
    rows = []
    for q in (2, 3):
        for s in range(20):
            K = signcomplex.sign_complex(pg_random_partial(q, s))
            inc = bounds.facet_intersection_index_bound(K)
            sw = gf2top.swh(K)
            ok = inc is not None and inc[0] == 1 and inc[1].free and sw <= 1
            rows.append(_row("ind_ub=1, swh<=1", f"pg(q={q},seed={s})", "1, <=1",
                             f"{inc[0] if inc else None}, {sw}", ok))
    return rows


def check_swh_calibration() -> list[Row]:
    rows = []
    for d in (2, 3, 4):
        K = simplicial.crosspolytope_boundary(d)
        rows.append(_row("swh", f"cross-polytope d={d}", d - 1, gf2top.swh(K)))
        cb = bounds.coind_lower(K).value
        rows.append(_row("coind_lb <= swh <= dim", f"cross-polytope d={d}", "holds",
                         f"{cb} <= {gf2top.swh(K)} <= {K.dim}", cb <= gf2top.swh(K) <= K.dim))
    T = simplicial.rp2_6()
    w = gf2top.cohomology_basis(T, 1)[0]
    L = simplicial.lift_double_cover(T, w.support)
    rows.append(_row("swh", "lift of RP2_6", 2, gf2top.swh(L)))
    return rows


def check_height_bound() -> list[Row]:
    rows = []
    for A in corpus():
        h = bounds.chain_height(A)
        sw = gf2top.swh(signcomplex.sign_complex(A))
        phi = bounds.phi_image_dimension(A)
        rows.append(_row("swh, phi <= 2h-1", bounds.instance_id(A), f"<= {2 * h - 1}",
                         f"swh={sw}, phi={phi}", sw <= 2 * h - 1 and phi <= 2 * h - 1))
    return rows


def check_random_height(seeds: int = 50) -> list[Row]:
    rows = []
    for N in (32, 64):
        limit = 8 * math.log2(N)
        hs = [bounds.chain_height(random_total(N, s)) for s in range(seeds)]
        bad = sum(h > limit for h in hs)
        rows.append(_row("h <= 8 log2 N (<=5% failures)", f"N={N}, {seeds} seeds",
                         f"<= {limit:g}", f"max h={max(hs)}, failures={bad}", bad <= 0.05 * seeds))
    return rows


def check_full_chain() -> list[Row]:
    rows = []
    for A in corpus():
        rep = bounds.invariant_report(A)
        bad = [c["check"] for c in rep.checks if not c["holds"]]
        rows.append(_row("bound chain holds", rep.instance, "all hold", "all hold" if not bad else ";".join(bad),
                         rep.chain_ok))
    return rows


# number, title, function, budget (s), suites
CHECKS: list[tuple[int, str, Callable[[], list[Row]], float, tuple[str, ...]]] = [
    (1, "Hadamard chain height", check_hadamard_height, 10, ("hadamard",)),
    (2, "Hadamard VC dimension", check_hadamard_vc, 60, ("hadamard",)),
    (3, "GHD projection realization", check_ghd_projection, 30, ("ghd",)),
    (4, "Realization / linear map round trip", check_round_trip, 60, ("ghd", "lemma32")),
    (5, "Row-cover nerve vs transpose", check_nerve_transpose, 120, ()),
    (6, "VC / omega sandwich", check_vc_omega, 600, ()),
    (7, "VR identities", check_vr_identities, 60, ("vr",)),
    (8, "VR homological connectivity", check_vr_connectivity, 300, ("vr",)),
    (9, "Cube-face nerve pipeline", check_nerve_pipeline, 300, ("vr",)),
    (10, "GHD vertex map", check_ghd_map, 60, ("ghd",)),
    (11, "Projective planes: index side", check_projective, 120, ("pg",)),
    (12, "swh calibration", check_swh_calibration, 120, ()),
    (13, "Chain-height index bound", check_height_bound, 300, ("hadamard",)),
    (14, "Random chain height", check_random_height, 300, ()),
    (15, "Full bound chain on the corpus", check_full_chain, 1200, ()),
]

SUITES = ("all", "ghd", "hadamard", "pg", "vr", "lemma32")


def run_suite(suite: str = "all", log: Callable[[str], None] | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    results = []
    for number, title, fn, budget, suites in CHECKS:
        if suite != "all" and suite not in suites:
            continue
        t0 = time.perf_counter()
        try:
            rows = fn()
        except Exception as exc:  # a crash is a failed row, not an aborted table
            rows = [Row(title, "-", "no error", f"{type(exc).__name__}: {exc}", False)]
        res = CheckResult(number, title, rows, time.perf_counter() - t0, budget)
        results.append(res)
        if log:
            log(format_result(res))
    return results


def format_result(res: CheckResult) -> str:
    head = f"[{'PASS' if res.ok else 'FAIL'}] {res.number:>2}. {res.title}  ({res.seconds:.1f}s / {res.budget:g}s)"
    lines = [head]
    for r in res.rows:
        lines.append(f"    {'ok ' if r.ok else 'BAD'} {r.check:<38} {r.item:<32} expected {r.expected:<16} got {r.computed}")
    return "\n".join(lines)
