"""Exact rational feasibility for the two sides of Gordan's alternative.

For finitely many points ``w_1..w_m`` in Q^d exactly one holds:

* 0 is in their convex hull (``lambda >= 0``, ``sum lambda = 1``, ``sum lambda_i w_i = 0``);
* some ``u`` has ``<u, w_i> > 0`` for all ``i`` (scaled to ``>= 1``).

Both are phase-1 simplex problems solved in :class:`fractions.Fraction`
with Bland's rule, so the answer is exact and the method terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Vector = list[Fraction]


def _phase1(A: list[list[Fraction]], b: list[Fraction]) -> tuple[Vector | None, Vector]:
    """Phase-1 simplex for ``A x = b, x >= 0``.

    Returns ``(x, y)``: a feasible ``x`` (or None) and the optimal phase-1
    duals ``y``.  When infeasible, ``y^T A <= 0`` and ``y^T b > 0``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    signs = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        # columns: n structural, m artificial, then rhs
        signs.append(sign)
        rows.append([sign * a for a in A[i]] + [Fraction(int(j == i)) for j in range(m)] + [sign * b[i]])
    basis = [n + i for i in range(m)]
    width = n + m
    # reduced costs of "minimize sum of artificials"
    cost = [Fraction(0)] * (width + 1)
    for r in rows:
        for j in range(n):
            cost[j] -= r[j]
        cost[width] -= r[width]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # unbounded cannot happen for phase 1; guard anyway
            break
        piv = rows[leave]
        pv = piv[enter]
        piv = [x / pv for x in piv]
        rows[leave] = piv
        for i, r in enumerate(rows):
            if i != leave and r[enter] != 0:
                f = r[enter]
                rows[i] = [x - f * y for x, y in zip(r, piv)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, piv)]
        basis[leave] = enter
    # reduced cost of artificial i is 1 - y'_i; undo the row sign flips
    y = [signs[i] * (1 - cost[n + i]) for i in range(m)]
    if cost[width] != 0:  # -(optimal artificial sum)
        return None, y
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][width]
    return x, y


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def dot(u: Sequence, w: Sequence) -> Fraction:
    return sum((_frac(a) * _frac(b) for a, b in zip(u, w)), Fraction(0))


def hull_weights(points: Sequence[Sequence]) -> Vector | None:
    """Convex weights expressing 0 from ``points``, or None if 0 is outside the hull."""
    pts = [[_frac(c) for c in p] for p in points]
    if not pts:
        return None
    return _hull_lp(pts)[0]


def _hull_lp(pts: list[Vector]) -> tuple[Vector | None, Vector]:
    d = len(pts[0])
    A = [[p[r] for p in pts] for r in range(d)] + [[Fraction(1)] * len(pts)]
    b = [Fraction(0)] * d + [Fraction(1)]
    return _phase1(A, b)


def separating_vector(points: Sequence[Sequence]) -> Vector | None:
    """``u`` with ``<u, w> >= 1`` for every point, or None if none exists."""
    pts = [[_frac(c) for c in p] for p in points]
    if not pts:
        return None
    lam, y = _hull_lp(pts)
    return None if lam is not None else _separator_from_duals(pts, y)


def _separator_from_duals(pts: list[Vector], y: Vector) -> Vector | None:
    """Separator from the infeasible hull LP.

    The hull LP has only ``d + 1`` rows; its phase-1 duals satisfy
    ``<y[:d], w> + y[d] <= 0`` with ``y[d] > 0``, so ``u = -y[:d] / y[d]``
    works.  Solving for ``u`` directly is kept as a fallback.
    """
    d, m = len(pts[0]), len(pts)
    if y[d] > 0:
        u = [-c / y[d] for c in y[:d]]
        if all(dot(u, p) >= 1 for p in pts):
            return u
    # u = p - q, <u, w_i> - s_i = 1 with p, q, s >= 0
    A = [p + [-c for c in p] + [Fraction(-int(j == i)) for j in range(m)] for i, p in enumerate(pts)]
    x, _ = _phase1(A, [Fraction(1)] * m)
    if x is None:
        return None
    return [x[r] - x[d + r] for r in range(d)]


@dataclass(frozen=True)
class Separation:
    """Outcome of :func:`separate_origin`: exactly one field is set."""

    u: Vector | None = None
    weights: Vector | None = None

    @property
    def separated(self) -> bool:
        return self.u is not None


def separate_origin(points: Sequence[Sequence]) -> Separation:
    """Strictly separate 0 from ``points`` or certify that 0 is in their hull."""
    pts = [[_frac(c) for c in p] for p in points]
    if not pts:
        raise ValueError("no points")
    lam, y = _hull_lp(pts)
    if lam is not None:
        return Separation(weights=lam)
    u = _separator_from_duals(pts, y)
    if u is None or any(dot(u, p) <= 0 for p in pts):  # exact re-check
        raise AssertionError("hull LP infeasible but no exact separator found")
    return Separation(u=u)
