"""Bit-packed linear algebra over GF(2).

Vectors are Python ints; bit ``i`` is coordinate ``i``.  Elimination keys each
reduced vector by its highest set bit, the same pivoting rule used for
boundary-matrix column reduction, so results are deterministic.
"""

from __future__ import annotations

from typing import Iterable


class Span:
    """Incrementally built subspace with membership tests."""

    def __init__(self, vectors: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._pivots)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, v: int) -> int:
        piv = self._pivots
        while v:
            top = v.bit_length() - 1
            p = piv.get(top)
            if p is None:
                return v
            v ^= p
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if it was independent of the span."""
        r = self.reduce(v)
        if r:
            self._pivots[r.bit_length() - 1] = r
            return True
        return False

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0


def rank(vectors: Iterable[int]) -> int:
    return Span(vectors).rank


def kernel(columns: list[int]) -> list[int]:
    """Basis of ``{x : sum_i x_i * columns[i] = 0}``, each as a bitmask over i."""
    piv: dict[int, tuple[int, int]] = {}
    out = []
    for i, col in enumerate(columns):
        v, combo = col, 1 << i
        while v:
            top = v.bit_length() - 1
            hit = piv.get(top)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        if v:
            piv[v.bit_length() - 1] = (v, combo)
        else:
            out.append(combo)
    return out


def solve(columns: list[int], target: int) -> int | None:
    """Some ``x`` with ``sum_i x_i * columns[i] = target``, or None."""
    piv: dict[int, tuple[int, int]] = {}
    for i, col in enumerate(columns):
        v, combo = col, 1 << i
        while v:
            top = v.bit_length() - 1
            hit = piv.get(top)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        if v:
            piv[v.bit_length() - 1] = (v, combo)
    v, combo = target, 0
    while v:
        hit = piv.get(v.bit_length() - 1)
        if hit is None:
            return None
        v ^= hit[0]
        combo ^= hit[1]
    return combo


def bits(v: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out
