"""Exact reduced simplicial homology over the rationals.

Boundary matrices carry integer entries (always -1/0/+1 at construction) and
ranks are computed by fraction-free integer elimination, so every Betti
number is exact.  The (-1)-dimensional cell doubles as the augmentation,
which makes reduced homology the uniform default: the empty space has
Betti vector {-1: 1} and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Union

from .poset import SimplicialComplex, SimplicialPoset

SparseRow = dict[int, int]


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    """Rank over Q of an integer matrix given as sparse rows.

    Fraction-free elimination; the pivot column is the active column with the
    fewest nonzeros (ties to the smallest index), likewise for the pivot row,
    so the result is deterministic.  Rows are gcd-normalized after each step
    to keep entries small.
    """
    work = [dict(r) for r in rows if r]
    if not work:
        return 0
    col_rows: dict[int, set[int]] = {}
    for i, row in enumerate(work):
        for j in row:
            col_rows.setdefault(j, set()).add(i)
    active = set(col_rows)
    rank = 0
    while active:
        c = min(active, key=lambda j: (len(col_rows[j]), j))
        holders = col_rows[c]
        if not holders:
            active.discard(c)
            continue
        r = min(holders, key=lambda i: (len(work[i]), i))
        piv_row = work[r]
        piv = piv_row[c]
        rank += 1
        for i in list(holders):
            if i == r:
                continue
            row = work[i]
            v = row[c]
            new: SparseRow = {}
            for j in row.keys() | piv_row.keys():
                val = piv * row.get(j, 0) - v * piv_row.get(j, 0)
                if val:
                    new[j] = val
            if new:
                g = 0
                for val in new.values():
                    g = gcd(g, val)
                if g > 1:
                    new = {j: val // g for j, val in new.items()}
            for j in row.keys() - new.keys():
                col_rows[j].discard(i)
            for j in new.keys() - row.keys():
                col_rows.setdefault(j, set()).add(i)
            work[i] = new
        for j in piv_row:
            col_rows[j].discard(r)
        active.discard(c)
    return rank


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers, indexed from dimension -1 upward.

    Only nonzero entries are stored; lookups outside the support return 0.
    """

    entries: tuple[tuple[int, int], ...]

    @staticmethod
    def from_dict(d: Mapping[int, int]) -> "BettiVector":
        return BettiVector(tuple(sorted((k, v) for k, v in d.items() if v)))

    def __getitem__(self, dim: int) -> int:
        for k, v in self.entries:
            if k == dim:
                return v
        return 0

    def items(self) -> tuple[tuple[int, int], ...]:
        return self.entries

    @property
    def is_trivial(self) -> bool:
        return not self.entries

    def top_dim(self) -> int | None:
        """Largest dimension with a nonzero entry, or None."""
        return self.entries[-1][0] if self.entries else None

    def agrees_from(self, other: "BettiVector", ell: int) -> bool:
        """Equality of the two vectors in every dimension >= ell."""
        dims = {k for k, _ in self.entries} | {k for k, _ in other.entries}
        return all(self[d] == other[d] for d in dims if d >= ell)

    def __repr__(self) -> str:
        return f"BettiVector({dict(self.entries)})"


Space = Union[SimplicialPoset, SimplicialComplex]


class ChainComplex:
    """Augmented rational chain complex of a poset or complex.

    ``boundary[n]`` maps C_n to C_{n-1}; dimension -1 has the single
    augmentation basis element.  d o d = 0 is asserted at build time.
    """

    __slots__ = ("sizes", "boundary", "basis")

    def __init__(self, sizes: dict[int, int],
                 boundary: dict[int, list[SparseRow]],
                 basis: dict[int, list]):
        self.sizes = sizes
        self.boundary = boundary
        self.basis = basis
        self._check_dd()

    def _check_dd(self) -> None:
        for n in sorted(self.boundary):
            upper = self.boundary.get(n + 1)
            if not upper:
                continue
            lower = self.boundary[n]
            for r, row in enumerate(upper):
                acc: SparseRow = {}
                for j, a in row.items():
                    for k, b in lower[j].items():
                        acc[k] = acc.get(k, 0) + a * b
                if any(acc.values()):
                    raise AssertionError(
                        f"boundary of boundary nonzero at dimension {n + 1}, "
                        f"basis element {r}")

    def size(self, n: int) -> int:
        return self.sizes.get(n, 0)

    def rank_boundary(self, n: int) -> int:
        rows = self.boundary.get(n)
        return sparse_rank(rows) if rows else 0

    @property
    def top(self) -> int:
        return max(self.sizes)


def chain_complex(X: Space) -> ChainComplex:
    """Chain complex with bases the cells per dimension and d = sum (-1)^i d_i."""
    if isinstance(X, SimplicialComplex):
        return _complex_chain(X)
    if isinstance(X, SimplicialPoset):
        return _poset_chain(X)
    raise TypeError(f"expected a poset or complex, got {type(X).__name__}")


def _poset_chain(X: SimplicialPoset) -> ChainComplex:
    sizes: dict[int, int] = {}
    basis: dict[int, list] = {}
    index: dict[int, dict[int, int]] = {}
    for d in range(-1, X.dim + 1):
        cells = sorted(X.cells_of_dim(d))
        if cells or d == -1:
            sizes[d] = len(cells)
            basis[d] = cells
            index[d] = {c: i for i, c in enumerate(cells)}
    boundary: dict[int, list[SparseRow]] = {}
    for d in range(0, X.dim + 1):
        if d not in sizes:
            continue
        rows = []
        below = index[d - 1]
        for c in basis[d]:
            row: SparseRow = {}
            for i, f in enumerate(X.faces_of(c)):
                j = below[f]
                row[j] = row.get(j, 0) + (1 if i % 2 == 0 else -1)
            rows.append({j: v for j, v in row.items() if v})
        boundary[d] = rows
    return ChainComplex(sizes, boundary, basis)


def _complex_chain(K: SimplicialComplex) -> ChainComplex:
    sizes: dict[int, int] = {}
    basis: dict[int, list] = {}
    index: dict[int, dict[tuple, int]] = {}
    for d in range(-1, K.dim + 1):
        sims = K.simplices_of_dim(d)
        sizes[d] = len(sims)
        basis[d] = sims
        index[d] = {s: i for i, s in enumerate(sims)}
    boundary: dict[int, list[SparseRow]] = {}
    for d in range(0, K.dim + 1):
        rows = []
        below = index[d - 1]
        for s in basis[d]:
            row: SparseRow = {}
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                j = below[face]
                row[j] = row.get(j, 0) + (1 if i % 2 == 0 else -1)
            rows.append(row)
        boundary[d] = rows
    return ChainComplex(sizes, boundary, basis)


def reduced_betti(X: Space) -> BettiVector:
    """Exact reduced Betti numbers over Q."""
    cc = chain_complex(X)
    ranks: dict[int, int] = {}
    for n in range(0, cc.top + 1):
        ranks[n] = cc.rank_boundary(n)
    out: dict[int, int] = {}
    for n in range(-1, cc.top + 1):
        b = cc.size(n) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        if b:
            out[n] = b
    return BettiVector.from_dict(out)


def top_nonzero_betti(X: Space, floor: int = 0) -> int | None:
    """Largest n >= floor with nonzero reduced Betti number, scanning downward.

    Computes boundary ranks lazily from the top dimension, so callers that
    only need "is anything alive at or above floor" pay for few eliminations.
    """
    cc = chain_complex(X)
    ranks: dict[int, int] = {}

    def rank(n: int) -> int:
        if n not in ranks:
            ranks[n] = cc.rank_boundary(n) if 0 <= n <= cc.top else 0
        return ranks[n]

    for n in range(cc.top, floor - 1, -1):
        if n < 0:
            break
        if cc.size(n) - rank(n) - rank(n + 1):
            return n
    return None


def euler_characteristic(X: Space) -> int:
    """Alternating sum of cell counts in dimensions >= 0."""
    cc = chain_complex(X)
    return sum((-1) ** n * cc.size(n) for n in range(0, cc.top + 1))


def betti_sum_check(X: Space) -> bool:
    """Euler characteristic equals the alternating sum of unreduced Betti numbers."""
    b = reduced_betti(X)
    if b[-1]:
        # empty space: chi = 0 and no unreduced homology at all
        return euler_characteristic(X) == 0
    dims = [d for d, _ in b.items() if d >= 0]
    top = max(dims) if dims else 0
    unreduced = sum((-1) ** n * (b[n] + (1 if n == 0 else 0))
                    for n in range(0, top + 1))
    return euler_characteristic(X) == unreduced
