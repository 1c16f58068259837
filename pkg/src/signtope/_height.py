"""Longest strict chain in the intersection closure of a family of sets.

Sets are bitmasks.  ``down(X)`` is the length of the longest chain of closure
members ending (at the top) in ``X``; it satisfies

    down(X) = 1 + max { down(X & G) : G generator, X & G not in {0, X} }

and is memoized (open addressing over flat arrays).  Children are taken
largest first, and a child of size ``s`` can add at most ``s`` to the chain,
so the scan of a node stops at the first child no larger than the best
value found so far.

Masks up to 64 bits run through a numba kernel; wider ones use plain ints.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._limits import CapExceeded

DEFAULT_MAX_SETS = 1_000_000
_MAX_DEPTH = 66  # a strict chain of 64-bit masks has at most 64 members


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True)
def _fill(X, gens, buf, sz):
    m = 0
    for i in range(gens.shape[0]):
        a = X & gens[i]
        if a != np.uint64(0) and a != X:
            buf[m] = a
            sz[m] = _popcount(a)
            m += 1
    return m


@njit(cache=True)
def _take(buf, sz, m, floor):
    """Index of the largest unused child with size > floor (or -1); retires its duplicates."""
    best = -1
    bs = floor
    for i in range(m):
        if sz[i] > bs:
            bs = sz[i]
            best = i
    if best >= 0:
        y = buf[best]
        for i in range(m):
            if buf[i] == y:
                sz[i] = -1
    return best


@njit(cache=True)
def _slot(keys, x, mask):
    h = (x * np.uint64(0x9E3779B97F4A7C15)) >> np.uint64(40)
    i = np.int64(h) & mask
    while keys[i] != np.uint64(0) and keys[i] != x:
        i = (i + 1) & mask
    return i


@njit(cache=True)
def _height64(tops, gens, max_sets):
    cap = 1
    while cap < 2 * max_sets:
        cap *= 2
    keys = np.zeros(cap, dtype=np.uint64)
    vals = np.zeros(cap, dtype=np.int64)
    mask = cap - 1
    n_seen = 0
    D = _MAX_DEPTH
    G = gens.shape[0]
    kids = np.zeros((D, G), dtype=np.uint64)
    sizes = np.zeros((D, G), dtype=np.int64)
    cnt = np.zeros(D, dtype=np.int64)
    st_x = np.zeros(D, dtype=np.uint64)
    st_best = np.zeros(D, dtype=np.int64)
    overall = 0
    for t in range(tops.shape[0]):
        g = tops[t]
        if _popcount(g) <= overall:
            continue
        gi = _slot(keys, g, mask)
        if keys[gi] == g:
            v = vals[gi]
        else:
            sp = 0
            st_x[0] = g
            cnt[0] = _fill(g, gens, kids[0], sizes[0])
            st_best[0] = 0
            v = 0
            while sp >= 0:
                i = _take(kids[sp], sizes[sp], cnt[sp], st_best[sp])
                if i >= 0:
                    y = kids[sp, i]
                    yi = _slot(keys, y, mask)
                    d = vals[yi] if keys[yi] == y else -1
                    if d >= 0:
                        if d > st_best[sp]:
                            st_best[sp] = d
                    else:
                        sp += 1
                        st_x[sp] = y
                        cnt[sp] = _fill(y, gens, kids[sp], sizes[sp])
                        st_best[sp] = 0
                else:
                    val = st_best[sp] + 1
                    xi = _slot(keys, st_x[sp], mask)
                    keys[xi] = st_x[sp]
                    vals[xi] = val
                    n_seen += 1
                    if n_seen > max_sets:
                        return -1, n_seen
                    sp -= 1
                    if sp >= 0:
                        if val > st_best[sp]:
                            st_best[sp] = val
                    else:
                        v = val
        if v > overall:
            overall = v
    return overall, n_seen


def _height_py(tops: list[int], gens: list[int], max_sets: int) -> tuple[int, int]:
    memo: dict[int, int] = {}

    def children(x):
        kids = {x & g for g in gens} - {0, x}
        return sorted(kids, key=lambda y: (-y.bit_count(), y))

    overall = 0
    for g in tops:
        if g.bit_count() <= overall:
            continue
        if g not in memo:
            stack = [(g, children(g), 0, 0)]
            while stack:
                x, kids, i, best = stack[-1]
                if i < len(kids) and kids[i].bit_count() > best:
                    y = kids[i]
                    stack[-1] = (x, kids, i + 1, best)
                    if y in memo:
                        stack[-1] = (x, kids, i + 1, max(best, memo[y]))
                    else:
                        stack.append((y, children(y), 0, 0))
                else:
                    stack.pop()
                    memo[x] = best + 1
                    if len(memo) > max_sets:
                        raise CapExceeded(f"chain height search visited more than {max_sets} sets")
                    if stack:
                        px, pk, pi, pb = stack[-1]
                        stack[-1] = (px, pk, pi, max(pb, best + 1))
        overall = max(overall, memo[g])
    return overall, len(memo)


def longest_chain(generators, n_bits: int, max_sets: int = DEFAULT_MAX_SETS) -> tuple[int, int]:
    """Longest strict chain among nonempty intersections of ``generators``.

    Returns ``(height, sets_visited)``.  Empty generators are ignored; an
    empty family has height 0.
    """
    gens = sorted({int(g) for g in generators if g}, key=lambda g: (-g.bit_count(), g))
    if not gens:
        return 0, 0
    if n_bits <= 64:
        arr = np.array(gens, dtype=np.uint64)
        h, seen = _height64(arr, arr, max_sets)
        if h < 0:
            raise CapExceeded(f"chain height search visited more than {max_sets} sets")
        return int(h), int(seen)
    return _height_py(gens, gens, max_sets)
