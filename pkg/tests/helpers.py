"""Independent oracles and instance generators for the test suite.

Everything here deliberately avoids the production code paths it is used to
check: ranks come from dense Gauss-Jordan over Fractions (the library uses
sparse fraction-free integer elimination), boundary matrices are rebuilt
from scratch, and the lattice oracle never uses the rank-nullity shortcut
for cycle spaces at all.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product

from multinerve import SimplicialComplex, SimplicialPoset, build_poset


# ---------------------------------------------------------------------------
# dense exact rank (independent of multinerve.homology.sparse_rank)


def gauss_jordan_rank(rows: list[list]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def dense_boundaries(K: SimplicialComplex) -> tuple[dict, dict]:
    """Bases and dense boundary matrices of the augmented chain complex."""
    basis = {}
    for d in range(-1, K.dim + 1):
        basis[d] = sorted(tuple(sorted(s)) for s in K.simplices if len(s) == d + 1)
    index = {d: {s: i for i, s in enumerate(b)} for d, b in basis.items()}
    boundary = {}
    for d in range(0, K.dim + 1):
        rows = []
        for s in basis[d]:
            row = [0] * len(basis[d - 1])
            for i in range(len(s)):
                row[index[d - 1][s[:i] + s[i + 1:]]] += (-1) ** i
            rows.append(row)
        boundary[d] = rows
    return basis, boundary


def betti_oracle_gj(K: SimplicialComplex) -> dict[int, int]:
    """Reduced Betti numbers via dense Gauss-Jordan ranks."""
    basis, boundary = dense_boundaries(K)
    ranks = {d: gauss_jordan_rank(rows) for d, rows in boundary.items()}
    out = {}
    for d in range(-1, K.dim + 1):
        b = len(basis[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def betti_oracle_lattice(K: SimplicialComplex) -> dict[int, int]:
    """Reduced Betti numbers by enumerating cycle and boundary subspaces.

    Every vector of the cycle space with entries in {-1, 0, 1} is found by
    direct enumeration; on complexes with at most 4 vertices these span the
    whole cycle space, so the rank of the found set is the cycle rank.
    Boundaries are spanned by the images of the basis simplices.
    """
    if len(K.vertices) > 4:
        raise ValueError("lattice oracle is only proven complete up to 4 vertices")
    basis, boundary = dense_boundaries(K)
    out = {}
    for d in range(-1, K.dim + 1):
        c = len(basis[d])
        rows = boundary.get(d)  # c x c_{d-1}
        cycles = []
        for vec in product((-1, 0, 1), repeat=c):
            if not any(vec):
                continue
            if rows is None or not rows or not rows[0]:
                cycles.append(list(vec))
                continue
            image = [sum(vec[i] * rows[i][j] for i in range(c))
                     for j in range(len(rows[0]))]
            if not any(image):
                cycles.append(list(vec))
        z = gauss_jordan_rank(cycles)
        upper = boundary.get(d + 1, [])
        b = gauss_jordan_rank([list(r) for r in upper])
        if z - b:
            out[d] = z - b
    return out


# ---------------------------------------------------------------------------
# brute-force Leray number from the definition, using the oracle homology


def leray_oracle(K: SimplicialComplex) -> int:
    best = 0
    for size in range(len(K.vertices) + 1):
        for S in combinations(K.vertices, size):
            bet = betti_oracle_gj(K.induced(S))
            for d, v in bet.items():
                if d >= 0 and v:
                    best = max(best, d + 1)
    return best


# ---------------------------------------------------------------------------
# classical barycentric subdivision of a complex, built from subsets


def classical_sd(K: SimplicialComplex) -> SimplicialComplex:
    elems = [tuple(sorted(s)) for s in K.simplices if s]
    chains = []
    for size in range(1, len(elems) + 1):
        for chain in combinations(sorted(elems, key=lambda t: (len(t), t)), size):
            ok = all(set(chain[i]) < set(chain[i + 1]) for i in range(size - 1))
            if ok:
                chains.append(chain)
    return SimplicialComplex(chains, closed=False)


# ---------------------------------------------------------------------------
# exhaustive complex enumeration


def all_complexes_on(labels: tuple) -> list[SimplicialComplex]:
    """Every simplicial complex with vertex set inside ``labels`` (labeled)."""
    subsets = [frozenset(c) for k in range(1, len(labels) + 1)
               for c in combinations(labels, k)]
    out = []
    for mask in range(2 ** len(subsets)):
        chosen = {subsets[i] for i in range(len(subsets)) if mask >> i & 1}
        if all(s - {v} in chosen for s in chosen for v in s if len(s) > 1):
            out.append(SimplicialComplex(chosen, closed=False))
    return out


def all_complexes_up_to_iso(n: int) -> list[SimplicialComplex]:
    """Simplicial complexes on at most n vertices, one per isomorphism class.

    Enumerated as antichains of nonempty subsets (the facet sets), then
    deduplicated by the minimal facet list over all vertex permutations.
    """
    subsets = [frozenset(c) for k in range(1, n + 1)
               for c in combinations(range(n), k)]
    antichains: list[list[frozenset]] = []

    def grow(start: int, chosen: list[frozenset]) -> None:
        antichains.append(list(chosen))
        for j in range(start, len(subsets)):
            s = subsets[j]
            if all(not (s <= t or t <= s) for t in chosen):
                chosen.append(s)
                grow(j + 1, chosen)
                chosen.pop()

    grow(0, [])

    seen = set()
    out = []
    for facets in antichains:
        canon = min(
            tuple(sorted(tuple(sorted(perm[v] for v in f)) for f in facets))
            for perm in ({v: p[v] for v in range(n)}
                         for p in permutations(range(n))))
        if canon not in seen:
            seen.add(canon)
            out.append(SimplicialComplex(facets))
    return out


# ---------------------------------------------------------------------------
# random posets: a random complex with some cells duplicated


def random_complex(rng: random.Random, n_vertices: int = 5,
                   n_facets: int = 6, max_facet: int = 3) -> SimplicialComplex:
    facets = []
    for _ in range(rng.randrange(n_facets + 1)):
        size = rng.randrange(1, max_facet + 1)
        facets.append(rng.sample(range(n_vertices), min(size, n_vertices)))
    return SimplicialComplex(facets)


def random_poset(rng: random.Random, n_vertices: int = 5,
                 n_facets: int = 5, max_facet: int = 3,
                 max_duplications: int = 3) -> SimplicialPoset:
    P = random_complex(rng, n_vertices, n_facets, max_facet).as_poset()
    records = [(r.dim, list(r.faces)) for r in P.export_records()]
    candidates = [c for c in P.cells() if P.dim_of(c) >= 1]
    for _ in range(rng.randrange(max_duplications + 1)):
        if not candidates:
            break
        c = rng.choice(candidates)
        records.append(records[c])
    return build_poset(records)
