"""Partial sign matrices over {+1, -1, *} and the instance generators.

Entries are stored as an ``int8`` array: ``+1`` (Plus), ``-1`` (Minus) and
``0`` (Star).  Rows and columns of the cube-indexed families (GHD, Hadamard)
are indexed by the integer value of the bitstring, so index ``i`` is the
string ``format(i, f"0{n}b")`` and coordinate ``x_1`` is the most significant
bit.

Random generators use numpy's PCG64 bit generator (``numpy.random.PCG64``)
seeded with the given ``uint64`` seed.  The stream is stable across numpy
releases, which keeps reports reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

PLUS, MINUS, STAR = 1, -1, 0

GHD_MAX_N = 14
HADAMARD_MAX_N = 10
PG_ORDERS = (2, 3, 4, 5)

_CHARS = {PLUS: "+", MINUS: "-", STAR: "*"}
_VALUES = {"+": PLUS, "-": MINUS, "*": STAR}


class SignMatrixError(ValueError):
    """Invalid parameters or a malformed matrix."""


@dataclass(frozen=True, eq=False)
class RowSupport:
    pos: frozenset[int]
    neg: frozenset[int]

    def __post_init__(self):
        if self.pos & self.neg:
            raise SignMatrixError("row support sets must be disjoint")


@dataclass(frozen=True, eq=False)
class PartialSignMatrix:
    """An ``n_rows x n_cols`` matrix over {+1, -1, *}.

    ``source`` records the generator and its parameters, if any; bounds use
    it to pick family-specific witnesses (e.g. the GHD projection).
    """

    entries: np.ndarray
    source: dict = field(default_factory=dict)

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int8, copy=True)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise SignMatrixError(f"need a nonempty 2-d matrix, got shape {a.shape}")
        if not np.isin(a, (PLUS, MINUS, STAR)).all():
            raise SignMatrixError("entries must be +1, -1 or 0 (Star)")
        empty = np.flatnonzero((a == STAR).all(axis=1))
        if empty.size:
            raise SignMatrixError(f"row {int(empty[0])} has only Star entries")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n_rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n_cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __getitem__(self, idx):
        return self.entries[idx]

    def __eq__(self, other):
        if not isinstance(other, PartialSignMatrix):
            return NotImplemented
        return self.shape == other.shape and bool((self.entries == other.entries).all())

    def __hash__(self):
        return hash((self.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"PartialSignMatrix({self.n_rows}x{self.n_cols}, source={self.source or None})"

    def is_total(self) -> bool:
        return not (self.entries == STAR).any()

    def density(self) -> float:
        """Fraction of non-Star entries."""
        return float((self.entries != STAR).mean())

    def row_masks(self) -> list[tuple[int, int]]:
        """Per row, ``(pos, neg)`` column bitmasks."""
        out = []
        for row in self.entries:
            pos = sum(1 << j for j in np.flatnonzero(row == PLUS).tolist())
            neg = sum(1 << j for j in np.flatnonzero(row == MINUS).tolist())
            out.append((pos, neg))
        return out

    def to_text(self) -> str:
        lines = [f"{self.n_rows} {self.n_cols}"]
        lines += ["".join(_CHARS[int(v)] for v in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> PartialSignMatrix:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise SignMatrixError("empty matrix file")
        try:
            rows, cols = (int(t) for t in lines[0].split())
        except ValueError:
            raise SignMatrixError(f"bad header line {lines[0]!r}") from None
        body = lines[1:]
        if len(body) != rows:
            raise SignMatrixError(f"header says {rows} rows, found {len(body)}")
        grid = []
        for i, ln in enumerate(body):
            if len(ln) != cols or any(c not in _VALUES for c in ln):
                raise SignMatrixError(f"row {i}: expected {cols} characters from '+-*'")
            grid.append([_VALUES[c] for c in ln])
        return cls(np.array(grid, dtype=np.int8))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())

    @classmethod
    def load(cls, path: str | Path) -> PartialSignMatrix:
        return cls.from_text(Path(path).read_text())


def from_rows(rows: list[str] | list[list[int]]) -> PartialSignMatrix:
    """Build from strings like ``"+-*"`` or from integer lists."""
    if rows and isinstance(rows[0], str):
        return PartialSignMatrix(np.array([[_VALUES[c] for c in r] for r in rows], dtype=np.int8))
    return PartialSignMatrix(np.array(rows, dtype=np.int8))


def _bitcount_table(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    return np.array([int(v).bit_count() for v in idx], dtype=np.int64)


def hamming_distances(n: int) -> np.ndarray:
    """``2^n x 2^n`` matrix of Hamming distances between bitstrings."""
    idx = np.arange(1 << n, dtype=np.int64)
    return _bitcount_table(n)[idx[:, None] ^ idx[None, :]]


def ghd(n: int, k: int, cap: int = GHD_MAX_N) -> PartialSignMatrix:
    """Gap Hamming Distance: Plus at distance <= k, Minus at >= n-k, Star between."""
    if k < 1 or 2 * k >= n:
        raise SignMatrixError(f"ghd needs 1 <= k and 2k < n, got n={n}, k={k}")
    if n > cap:
        raise SignMatrixError(f"ghd n={n} exceeds cap {cap}")
    dist = hamming_distances(n)
    a = np.zeros(dist.shape, dtype=np.int8)
    a[dist <= k] = PLUS
    a[dist >= n - k] = MINUS
    return PartialSignMatrix(a, source={"family": "ghd", "n": n, "k": k})


def hadamard(n_exp: int, cap: int = HADAMARD_MAX_N) -> PartialSignMatrix:
    """Sylvester Hadamard matrix ``(-1)^<x,y>`` over F_2^n."""
    if n_exp < 1:
        raise SignMatrixError("hadamard exponent must be >= 1")
    if n_exp > cap:
        raise SignMatrixError(f"hadamard exponent {n_exp} exceeds cap {cap}")
    idx = np.arange(1 << n_exp, dtype=np.int64)
    parity = _bitcount_table(n_exp)[idx[:, None] & idx[None, :]] & 1
    a = np.where(parity == 0, PLUS, MINUS).astype(np.int8)
    return PartialSignMatrix(a, source={"family": "hadamard", "n": n_exp})


def random_total(n: int, seed: int) -> PartialSignMatrix:
    """``n x n`` matrix with iid uniform signs (PCG64 stream)."""
    if n < 1:
        raise SignMatrixError("n must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = rng.integers(0, 2, size=(n, n))
    a = np.where(bits == 0, PLUS, MINUS).astype(np.int8)
    return PartialSignMatrix(a, source={"family": "random", "n": n, "seed": seed})


class GaloisField:
    """Arithmetic tables for the small fields F_q, q in {2, 3, 4, 5}.

    F_4 is F_2[a]/(a^2 + a + 1), elements encoded as 2-bit integers
    ``b1*a + b0``.
    """

    def __init__(self, q: int):
        if q not in PG_ORDERS:
            raise SignMatrixError(f"unsupported field order q={q}; choose from {PG_ORDERS}")
        self.q = q
        if q == 4:
            self.add = np.array([[x ^ y for y in range(4)] for x in range(4)])
            self.mul = np.array([[self._mul_f4(x, y) for y in range(4)] for x in range(4)])
        else:
            r = np.arange(q)
            self.add = (r[:, None] + r[None, :]) % q
            self.mul = (r[:, None] * r[None, :]) % q

    @staticmethod
    def _mul_f4(x: int, y: int) -> int:
        # carry-less product, then reduce a^2 -> a + 1
        prod = 0
        for i in range(2):
            if (y >> i) & 1:
                prod ^= x << i
        if prod & 0b100:
            prod ^= 0b111
        return prod

    def dot(self, u, v) -> int:
        acc = 0
        for a, b in zip(u, v):
            acc = int(self.add[acc, self.mul[a, b]])
        return acc


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized representatives (first nonzero coordinate 1) of PG(2,q)."""
    pts = []
    for v in itertools.product(range(q), repeat=3):
        nz = [c for c in v if c != 0]
        if nz and nz[0] == 1:
            pts.append(v)
    return sorted(pts)


def pg_incidence(q: int) -> np.ndarray:
    """Line-point incidence matrix of PG(2,q); rows are lines, columns points.

    Lines use the same normalized triples as points (duality): point ``p`` lies
    on line ``l`` iff ``<l, p> = 0`` over F_q.
    """
    field_ = GaloisField(q)
    pts = projective_points(q)
    inc = np.zeros((len(pts), len(pts)), dtype=np.int8)
    for i, line in enumerate(pts):
        for j, p in enumerate(pts):
            if field_.dot(line, p) == 0:
                inc[i, j] = 1
    return inc


def pg_random_partial(q: int, seed: int) -> PartialSignMatrix:
    """Random signs on the incidence pattern of PG(2,q), Star off the incidences."""
    inc = pg_incidence(q)
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = rng.integers(0, 2, size=int(inc.sum()))
    a = np.zeros(inc.shape, dtype=np.int8)
    a[inc == 1] = np.where(bits == 0, PLUS, MINUS)
    return PartialSignMatrix(a, source={"family": "pg", "q": q, "seed": seed})


def transpose(a: PartialSignMatrix) -> PartialSignMatrix:
    if (a.entries == STAR).all(axis=0).any():
        j = int(np.flatnonzero((a.entries == STAR).all(axis=0))[0])
        raise SignMatrixError(f"column {j} has only Star entries; transpose undefined")
    return PartialSignMatrix(a.entries.T)


def row_supports(a: PartialSignMatrix) -> list[RowSupport]:
    return [
        RowSupport(frozenset(np.flatnonzero(row == PLUS).tolist()),
                   frozenset(np.flatnonzero(row == MINUS).tolist()))
        for row in a.entries
    ]


def generate(family: str, **params) -> PartialSignMatrix:
    """Dispatch by family name: ``ghd``, ``hadamard``, ``random`` or ``pg``."""
    if family == "ghd":
        return ghd(params["n"], params["k"], cap=params.get("cap", GHD_MAX_N))
    if family == "hadamard":
        return hadamard(params["n"], cap=params.get("cap", HADAMARD_MAX_N))
    if family == "random":
        return random_total(params["n"], params.get("seed", 0))
    if family == "pg":
        return pg_random_partial(params["q"], params.get("seed", 0))
    raise SignMatrixError(f"unknown family {family!r}")
