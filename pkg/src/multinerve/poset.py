"""Simplicial posets and simplicial complexes.

A simplicial poset is stored as a flat list of cells.  Each cell knows its
dimension and an ordered tuple of faces (the indexed face operators); the
unique (-1)-dimensional cell is the least element.  Vertex sets do not
determine cells here, which is precisely what separates a simplicial poset
from a simplicial complex, so faces are kept as explicit id sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Sequence

CellId = int


class PosetError(ValueError):
    """Raised when cell data violates a simplicial-poset invariant."""


@dataclass(frozen=True)
class CellRecord:
    """Raw input for one cell: its dimension and ordered face ids."""

    dim: int
    faces: tuple[CellId, ...]


def _as_records(records: Iterable) -> list[CellRecord]:
    out = []
    for rec in records:
        if isinstance(rec, CellRecord):
            out.append(rec)
        else:
            dim, faces = rec
            out.append(CellRecord(int(dim), tuple(int(f) for f in faces)))
    return out


class SimplicialPoset:
    """A validated finite simplicial poset with least element.

    Immutable after construction; build instances through :func:`build_poset`.
    """

    __slots__ = ("_dims", "_faces", "_verts", "least", "vertex_order",
                 "_vrank", "_lower", "_by_dim")

    def __init__(self, dims, faces, verts, least, vertex_order):
        self._dims: tuple[int, ...] = dims
        self._faces: tuple[tuple[CellId, ...], ...] = faces
        self._verts: tuple[frozenset, ...] = verts
        self.least: CellId = least
        self.vertex_order: tuple[CellId, ...] = vertex_order
        self._vrank = {v: i for i, v in enumerate(vertex_order)}
        self._lower: list[frozenset] | None = None
        by_dim: dict[int, list[CellId]] = {}
        for c, d in enumerate(dims):
            by_dim.setdefault(d, []).append(c)
        self._by_dim = {d: tuple(cs) for d, cs in by_dim.items()}

    # -- basic queries ----------------------------------------------------

    @property
    def n_cells(self) -> int:
        return len(self._dims)

    @property
    def dim(self) -> int:
        """Largest cell dimension; -1 when only the least element exists."""
        return max(self._dims)

    def cells(self) -> range:
        return range(self.n_cells)

    def dim_of(self, c: CellId) -> int:
        self._check_cell(c)
        return self._dims[c]

    def faces_of(self, c: CellId) -> tuple[CellId, ...]:
        self._check_cell(c)
        return self._faces[c]

    def vertices_of(self, c: CellId) -> frozenset:
        self._check_cell(c)
        return self._verts[c]

    @property
    def vertices(self) -> tuple[CellId, ...]:
        return self.vertex_order

    def cells_of_dim(self, d: int) -> tuple[CellId, ...]:
        return self._by_dim.get(d, ())

    def vertex_rank(self, v: CellId) -> int:
        return self._vrank[v]

    def _check_cell(self, c: CellId) -> None:
        if not (isinstance(c, int) and 0 <= c < self.n_cells):
            raise PosetError(f"unknown cell id {c!r}")

    # -- order structure --------------------------------------------------

    def _lower_sets(self) -> list[frozenset]:
        if self._lower is None:
            lower: list[frozenset] = []
            for c in range(self.n_cells):
                acc = {c}
                for f in self._faces[c]:
                    acc |= lower[f]
                lower.append(frozenset(acc))
            self._lower = lower
        return self._lower

    def lower_segment(self, c: CellId) -> frozenset:
        """All cells tau with tau <= c, including c and the least element."""
        self._check_cell(c)
        return self._lower_sets()[c]

    def leq(self, a: CellId, b: CellId) -> bool:
        self._check_cell(a)
        return a in self._lower_sets()[b]

    def strictly_above(self, c: CellId, within: Iterable[CellId] | None = None):
        """Cells tau with tau > c, restricted to ``within`` when given."""
        self._check_cell(c)
        pool = self.cells() if within is None else within
        lower = self._lower_sets()
        return [t for t in pool if t != c and c in lower[t]]

    # -- derived posets ---------------------------------------------------

    def induced_subposet(self, S: Iterable[CellId]) -> "SimplicialPoset":
        """Sub-poset of cells all of whose vertices lie in S, plus the least."""
        return self.induced_with_map(S)[0]

    def induced_with_map(self, S: Iterable[CellId]) -> tuple["SimplicialPoset", tuple[CellId, ...]]:
        """Induced subposet together with the original id of each new cell."""
        S = frozenset(S)
        unknown = S - set(self.vertex_order)
        if unknown:
            raise PosetError(f"unknown vertices {sorted(unknown)!r}")
        if len(S) == len(self.vertex_order):
            return self, tuple(self.cells())
        keep = [c for c in self.cells() if self._verts[c] <= S]
        new_id = {c: i for i, c in enumerate(keep)}
        dims = tuple(self._dims[c] for c in keep)
        faces = tuple(tuple(new_id[f] for f in self._faces[c]) for c in keep)
        verts = tuple(frozenset(new_id[v] for v in self._verts[c]) for c in keep)
        order = tuple(new_id[v] for v in self.vertex_order if v in S)
        sub = SimplicialPoset(dims, faces, verts, new_id[self.least], order)
        return sub, tuple(keep)

    def with_vertex_order(self, order: Sequence[CellId]) -> "SimplicialPoset":
        """Same poset with a different global vertex order.

        Each cell's face tuple is permuted so that face i still drops the
        i-th smallest vertex under the new order.
        """
        order = tuple(order)
        if sorted(order) != sorted(self.vertex_order):
            raise PosetError("new order must be a permutation of the vertices")
        rank = {v: i for i, v in enumerate(order)}
        records = []
        for c in self.cells():
            old_sorted = sorted(self._verts[c], key=self._vrank.__getitem__)
            new_sorted = sorted(self._verts[c], key=rank.__getitem__)
            faces = tuple(self._faces[c][old_sorted.index(v)] for v in new_sorted)
            records.append(CellRecord(self._dims[c], faces))
        return build_poset(records, vertex_order=order)

    def export_records(self) -> list[CellRecord]:
        return [CellRecord(self._dims[c], self._faces[c]) for c in self.cells()]

    def is_simplex(self) -> bool:
        """True when the poset is the face poset of a single simplex."""
        top = self.cells_of_dim(self.dim)
        return len(top) == 1 and self.n_cells == 2 ** (self.dim + 1)


def build_poset(cell_records: Iterable,
                vertex_order: Sequence[CellId] | None = None) -> SimplicialPoset:
    """Validate raw cell records and assemble a simplicial poset.

    Records are positional: cell i may only reference faces with id < i.  The
    unique (-1)-cell must be declared explicitly unless the record list is
    empty, in which case the least-only poset (the empty space) is returned.
    """
    records = _as_records(cell_records)
    if not records:
        records = [CellRecord(-1, ())]

    least_ids = [i for i, r in enumerate(records) if r.dim == -1]
    if not least_ids:
        raise PosetError("missing least element: no (-1)-dimensional cell declared")
    if len(least_ids) > 1:
        raise PosetError(f"cell {least_ids[1]}: second (-1)-dimensional cell, "
                         "least element must be unique")
    least = least_ids[0]

    dims, faces, verts = [], [], []
    for i, rec in enumerate(records):
        if rec.dim < -1:
            raise PosetError(f"cell {i}: dimension {rec.dim} below -1")
        if len(rec.faces) != rec.dim + 1:
            raise PosetError(f"cell {i}: expected {rec.dim + 1} faces, "
                             f"got {len(rec.faces)}")
        for f in rec.faces:
            if not 0 <= f < i:
                raise PosetError(f"cell {i}: dangling face reference {f}")
            if dims[f] != rec.dim - 1:
                raise PosetError(f"cell {i}: face {f} has dimension {dims[f]}, "
                                 f"expected {rec.dim - 1}")
        dims.append(rec.dim)
        faces.append(rec.faces)
        if rec.dim == -1:
            verts.append(frozenset())
        elif rec.dim == 0:
            verts.append(frozenset([i]))
        else:
            vs = frozenset().union(*(verts[f] for f in rec.faces))
            if len(vs) != rec.dim + 1:
                raise PosetError(f"cell {i}: repeated vertex "
                                 f"(has {len(vs)} distinct vertices, "
                                 f"needs {rec.dim + 1})")
            verts.append(vs)

    zero_cells = [i for i, d in enumerate(dims) if d == 0]
    if vertex_order is None:
        vertex_order = tuple(zero_cells)
    else:
        vertex_order = tuple(vertex_order)
        if sorted(vertex_order) != sorted(zero_cells):
            raise PosetError("vertex_order must list every 0-cell exactly once")
    vrank = {v: k for k, v in enumerate(vertex_order)}

    # face i of a cell drops the i-th smallest vertex
    for i, rec in enumerate(records):
        if rec.dim < 1:
            continue
        ordered = sorted(verts[i], key=vrank.__getitem__)
        for k, f in enumerate(rec.faces):
            expected = verts[i] - {ordered[k]}
            if verts[f] != expected:
                raise PosetError(f"cell {i}: face {k} drops the wrong vertex "
                                 "(face order inconsistent with vertex order)")

    # simplicial identity d_i d_j = d_{j-1} d_i for i < j
    for i, rec in enumerate(records):
        if rec.dim < 2:
            continue
        for a, b in combinations(range(rec.dim + 1), 2):
            if faces[faces[i][b]][a] != faces[faces[i][a]][b - 1]:
                raise PosetError(f"cell {i}: simplicial identity violated "
                                 f"at faces ({a}, {b})")

    poset = SimplicialPoset(tuple(dims), tuple(faces), tuple(verts),
                            least, vertex_order)

    # Boolean lower segments, by explicit enumeration
    lower = poset._lower_sets()
    for c in poset.cells():
        want = 2 ** (dims[c] + 1)
        if len(lower[c]) != want:
            raise PosetError(f"cell {c}: lower segment has {len(lower[c])} "
                             f"cells, expected {want}")
    return poset


# ---------------------------------------------------------------------------
# simplicial complexes


class SimplicialComplex:
    """A finite simplicial complex: subsets of a vertex set, closed downward.

    The empty simplex is always a member.  Vertex labels must be mutually
    orderable (ints, strings, tuples of one kind).
    """

    __slots__ = ("simplices", "vertices")

    def __init__(self, simplices: Iterable[Iterable] = (), *, closed: bool = False):
        sims = {frozenset(s) for s in simplices}
        sims.add(frozenset())
        if not closed:
            closure = set()
            for s in sims:
                for k in range(len(s) + 1):
                    closure.update(frozenset(c) for c in combinations(sorted(s), k))
            sims = closure
        else:
            for s in sims:
                for v in s:
                    if s - {v} not in sims:
                        raise PosetError(f"complex not closed downward: missing "
                                         f"face of {sorted(s)!r}")
        self.simplices: frozenset = frozenset(sims)
        self.vertices: tuple = tuple(sorted({v for s in sims for v in s}))

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.simplices

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, dim {self.dim})"

    @property
    def dim(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    @property
    def facets(self) -> list[frozenset]:
        non_max = set()
        for s in self.simplices:
            for v in s:
                non_max.add(s - {v})
        return sorted((s for s in self.simplices if s and s not in non_max),
                      key=lambda s: (len(s), sorted(s)))

    def simplices_of_dim(self, d: int) -> list[tuple]:
        return sorted(tuple(sorted(s)) for s in self.simplices if len(s) == d + 1)

    def induced(self, S: Iterable) -> "SimplicialComplex":
        S = set(S)
        return SimplicialComplex((s for s in self.simplices if set(s) <= S),
                                 closed=True)

    def as_poset(self) -> SimplicialPoset:
        """Face poset of the complex; cell ids follow (dim, vertex list) order."""
        ordered = sorted(self.simplices, key=lambda s: (len(s), sorted(s)))
        idx = {s: i for i, s in enumerate(ordered)}
        records = []
        for s in ordered:
            vs = sorted(s)
            records.append(CellRecord(len(s) - 1,
                                      tuple(idx[s - {v}] for v in vs)))
        return build_poset(records)

    def cell_label(self, poset_id: int) -> tuple:
        """Vertex tuple of the given cell of ``as_poset()``."""
        ordered = sorted(self.simplices, key=lambda s: (len(s), sorted(s)))
        return tuple(sorted(ordered[poset_id]))


def order_complex(elements: Iterable, leq: Callable[[object, object], bool]) -> SimplicialComplex:
    """Order complex of a finite poset: simplices are the chains.

    ``leq`` must be a partial order on the given elements; elements must be
    hashable and mutually orderable (they become vertex labels).
    """
    elems = sorted(set(elements))
    above = {e: [f for f in elems if f != e and leq(e, f)] for e in elems}
    chains: list[tuple] = []

    def extend(chain: list) -> None:
        chains.append(tuple(chain))
        for f in above[chain[-1]]:
            chain.append(f)
            extend(chain)
            chain.pop()

    # every chain is enumerated exactly once, starting from its minimum
    for e in elems:
        extend([e])
    return SimplicialComplex((frozenset(c) for c in chains), closed=False)


def barycentric_subdivision(X: SimplicialPoset) -> SimplicialComplex:
    """Order complex of X minus its least element."""
    elems = [c for c in X.cells() if c != X.least]
    return order_complex(elems, X.leq)


def upper_complexes(X: SimplicialPoset, sigma: CellId) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Order complexes of the closed and open upper intervals at sigma."""
    X._check_cell(sigma)
    up = X.strictly_above(sigma)
    D = order_complex(up + [sigma], X.leq)
    D_dot = order_complex(up, X.leq)
    return D, D_dot


# ---------------------------------------------------------------------------
# isomorphism testing (desk scale)


def _refine_colors(X: SimplicialPoset) -> list:
    colors: list = [(X.dim_of(c),) for c in X.cells()]
    while True:
        sig = [(colors[c], tuple(colors[f] for f in X.faces_of(c))) for c in X.cells()]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return new
        colors = new


def poset_isomorphic(X: SimplicialPoset, Y: SimplicialPoset) -> bool:
    """Face-order-preserving isomorphism test by color refinement + backtracking."""
    if X.n_cells != Y.n_cells or sorted(X._dims) != sorted(Y._dims):
        return False
    cx, cy = _refine_colors(X), _refine_colors(Y)
    if sorted(cx) != sorted(cy):
        return False
    by_color: dict[int, list[int]] = {}
    for c in Y.cells():
        by_color.setdefault(cy[c], []).append(c)

    order = sorted(X.cells(), key=lambda c: (X.dim_of(c), c))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def assign(k: int) -> bool:
        if k == len(order):
            return True
        c = order[k]
        for d in by_color.get(cx[c], ()):
            if d in used or Y.dim_of(d) != X.dim_of(c):
                continue
            if tuple(mapping[f] for f in X.faces_of(c)) != Y.faces_of(d):
                continue
            mapping[c] = d
            used.add(d)
            if assign(k + 1):
                return True
            del mapping[c]
            used.discard(d)
        return False

    return assign(0)


def complexes_isomorphic(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """Brute-force isomorphism test; intended for small vertex counts."""
    if len(K.vertices) != len(L.vertices) or len(K.simplices) != len(L.simplices):
        return False
    for perm in permutations(L.vertices):
        relabel = dict(zip(K.vertices, perm))
        if {frozenset(relabel[v] for v in s) for s in K.simplices} == set(L.simplices):
            return True
    return False
