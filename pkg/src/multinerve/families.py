"""Finite set families with an exact intersection-component oracle.

Two backends realize the oracle:

* ``subcomplex``: members are face-closed sets of simplices of one ambient
  triangulation; intersections are set intersections and components come
  from union-find over the face relation.
* ``box``: members are finite unions of open axis-aligned boxes with
  rational endpoints; intersections are enumerated box overlaps and
  components come from the strict-overlap graph.  Openness is modeled by
  strict inequalities throughout, so tangent boxes never merge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .homology import BettiVector, reduced_betti
from .poset import SimplicialComplex


class FamilyError(ValueError):
    """Raised on invalid family data or oracle misuse."""


@dataclass(frozen=True)
class Box:
    """Open axis-aligned box; per-axis rational intervals with lo < hi."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        for lo, hi in self.intervals:
            if not lo < hi:
                raise FamilyError(f"box interval ({lo}, {hi}) needs lo < hi")

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def meet(self, other: "Box") -> "Box | None":
        """Open intersection, or None when some axis fails to strictly overlap."""
        out = []
        for (a, b), (c, d) in zip(self.intervals, other.intervals):
            lo, hi = max(a, c), min(b, d)
            if not lo < hi:
                return None
            out.append((lo, hi))
        return Box(tuple(out))

    def overlaps(self, other: "Box") -> bool:
        return all(max(a, c) < min(b, d)
                   for (a, b), (c, d) in zip(self.intervals, other.intervals))


def box(*intervals) -> Box:
    """Convenience constructor: box((0,1), (2,3)) with ints/Fractions."""
    return Box(tuple((Fraction(lo), Fraction(hi)) for lo, hi in intervals))


@dataclass(frozen=True)
class BoxUnionMember:
    boxes: tuple[Box, ...]


@dataclass(frozen=True)
class SubcomplexMember:
    """Face-closed set of nonempty simplices of the ambient triangulation."""

    simplices: frozenset


@dataclass(frozen=True)
class ComponentLabel:
    """Canonical id of one connected component of an intersection region.

    ``canon`` is the smallest representative under the backend's deterministic
    enumeration; ``rep`` is a geometric handle usable for containment queries
    (a simplex tuple, or a Box inside the component).
    """

    subset: tuple[int, ...]
    canon: object
    rep: object

    def sort_key(self):
        return self.canon


class SetFamily:
    """Indexed family of members over one ambient space, with oracle caches."""

    def __init__(self, backend: str, members: Sequence, ambient,
                 gamma_dim: int, gamma_dim_assumed: bool = False):
        self.backend = backend
        self.members = tuple(members)
        self.ambient = ambient
        self.gamma_dim = gamma_dim
        self.gamma_dim_assumed = gamma_dim_assumed
        self._components_cache: dict[tuple, tuple] = {}
        self._betti_cache: dict[tuple, BettiVector] = {}

    def __len__(self) -> int:
        return len(self.members)

    @property
    def indices(self) -> range:
        return range(len(self.members))

    def check_index_set(self, A: Iterable[int]) -> tuple[int, ...]:
        A = tuple(sorted(set(A)))
        for a in A:
            if not 0 <= a < len(self.members):
                raise FamilyError(f"unknown member index {a}")
        return A


def subcomplex_family(T: SimplicialComplex, members: Sequence[Iterable],
                      gamma_dim: int | None = None) -> SetFamily:
    """Family of subcomplexes of the triangulation T.

    Members are given as iterables of simplices (any iterable of vertices
    each).  The ambient homology ceiling defaults to dim(T) + 1, the safe
    bound for a compact triangulated space.
    """
    made = []
    for k, raw in enumerate(members):
        sims = frozenset(frozenset(s) for s in raw if len(tuple(s)) > 0)
        for s in sims:
            if s not in T.simplices:
                raise FamilyError(f"member {k}: simplex {sorted(s)} not in "
                                  "the ambient triangulation")
            if len(s) > 1:
                for v in s:
                    if s - {v} not in sims:
                        raise FamilyError(f"member {k}: not face-closed at "
                                          f"{sorted(s)}")
        made.append(SubcomplexMember(sims))
    assumed = gamma_dim is not None
    if gamma_dim is None:
        gamma_dim = T.dim + 1
    return SetFamily("subcomplex", made, T, gamma_dim, assumed)


def box_family(dim: int, members: Sequence[Sequence[Box]],
               gamma_dim: int | None = None) -> SetFamily:
    """Family of open box unions in R^dim; gamma_dim defaults to dim."""
    made = []
    for k, boxes in enumerate(members):
        boxes = tuple(boxes)
        for b in boxes:
            if b.dim != dim:
                raise FamilyError(f"member {k}: box dimension {b.dim} != {dim}")
        made.append(BoxUnionMember(boxes))
    assumed = gamma_dim is not None
    if gamma_dim is None:
        gamma_dim = dim
    return SetFamily("box", made, dim, gamma_dim, assumed)


# ---------------------------------------------------------------------------
# region machinery


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = x
        while self.parent[p] != p:
            p = self.parent[p]
        while x != p:
            self.parent[x], x = p, self.parent[x]
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def _simplex_key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


def _region_simplices(F: SetFamily, A: tuple[int, ...]) -> frozenset:
    if not A:
        out: set = set()
        for m in F.members:
            out |= m.simplices
        return frozenset(out)
    sims = F.members[A[0]].simplices
    for a in A[1:]:
        sims = sims & F.members[a].simplices
    return sims


def _region_boxes(F: SetFamily, A: tuple[int, ...]) -> list[Box]:
    """Constituent open boxes of the region, in deterministic order."""
    if not A:
        return [b for m in F.members for b in m.boxes]
    out = []
    for combo in product(*(F.members[a].boxes for a in A)):
        cur = combo[0]
        for b in combo[1:]:
            cur = cur.meet(b)
            if cur is None:
                break
        if cur is not None:
            out.append(cur)
    return out


def components(F: SetFamily, A: Iterable[int]) -> tuple[ComponentLabel, ...]:
    """Connected components of the intersection over A (of the union if A is empty)."""
    A = F.check_index_set(A)
    if A in F._components_cache:
        return F._components_cache[A]
    if F.backend == "subcomplex":
        labels = _subcomplex_components(F, A)
    else:
        labels = _box_components(F, A)
    F._components_cache[A] = labels
    return labels


def _subcomplex_components(F: SetFamily, A: tuple[int, ...]) -> tuple[ComponentLabel, ...]:
    sims = _region_simplices(F, A)
    if not sims:
        return ()
    uf = _UnionFind(sims)
    for s in sims:
        if len(s) > 1:
            for v in s:
                uf.union(s, s - {v})
    labels = []
    for group in uf.groups().values():
        canon = min(_simplex_key(s) for s in group)
        labels.append(ComponentLabel(A, canon, canon[1]))
    return tuple(sorted(labels, key=ComponentLabel.sort_key))


def _box_components(F: SetFamily, A: tuple[int, ...]) -> tuple[ComponentLabel, ...]:
    boxes = _region_boxes(F, A)
    if not boxes:
        return ()
    uf = _UnionFind(range(len(boxes)))
    for i, j in combinations(range(len(boxes)), 2):
        if boxes[i].overlaps(boxes[j]):
            uf.union(i, j)
    labels = []
    for group in uf.groups().values():
        canon = min(group)
        labels.append(ComponentLabel(A, canon, boxes[canon]))
    return tuple(sorted(labels, key=ComponentLabel.sort_key))


def region_is_empty(F: SetFamily, A: Iterable[int]) -> bool:
    A = F.check_index_set(A)
    if F.backend == "subcomplex":
        return not _region_simplices(F, A)
    return not _region_boxes(F, A)


def component_containing(F: SetFamily, A: Iterable[int], rep) -> ComponentLabel:
    """The unique component of the region over A containing the representative.

    ``rep`` is a simplex (iterable of vertices) for the subcomplex backend or
    a Box lying inside the region for the box backend.
    """
    A = F.check_index_set(A)
    comps = components(F, A)
    if F.backend == "subcomplex":
        s = frozenset(rep)
        sims = _region_simplices(F, A)
        if s not in sims:
            raise FamilyError(f"representative {sorted(s)} lies outside the region")
        uf = _UnionFind(sims)
        for t in sims:
            if len(t) > 1:
                for v in t:
                    uf.union(t, t - {v})
        root = uf.find(s)
        target = min(_simplex_key(t) for t in uf.groups()[root])
        for c in comps:
            if c.canon == target:
                return c
        raise AssertionError("component lookup failed")
    if not isinstance(rep, Box):
        raise FamilyError("box-backend representative must be a Box")
    boxes = _region_boxes(F, A)
    hits = [i for i, b in enumerate(boxes) if b.overlaps(rep)]
    if not hits:
        raise FamilyError("representative lies outside the region")
    uf = _UnionFind(range(len(boxes)))
    for i, j in combinations(range(len(boxes)), 2):
        if boxes[i].overlaps(boxes[j]):
            uf.union(i, j)
    roots = {uf.find(i) for i in hits}
    if len(roots) != 1:
        raise AssertionError("representative spans several components")
    target = min(uf.groups()[roots.pop()])
    for c in comps:
        if c.canon == target:
            return c
    raise AssertionError("component lookup failed")


def region_betti(F: SetFamily, A: Iterable[int]) -> BettiVector:
    """Reduced Betti vector of the intersection over A (union when A is empty).

    Subcomplex regions are handed to the homology core directly.  Box regions
    go through the nerve of their constituent open boxes, which is exact for
    a good cover (all box intersections are open boxes or empty).
    """
    A = F.check_index_set(A)
    if A in F._betti_cache:
        return F._betti_cache[A]
    if F.backend == "subcomplex":
        out = reduced_betti(SimplicialComplex(_region_simplices(F, A)))
    else:
        out = reduced_betti(_box_nerve(_region_boxes(F, A)))
    F._betti_cache[A] = out
    return out


def _box_nerve(boxes: Sequence[Box]) -> SimplicialComplex:
    """Nerve of a list of open boxes.

    Alive index sets are grown by sorted-prefix extension; since box
    intersections shrink monotonically this enumerates each nonempty
    intersection exactly once, with its intersection box in hand.
    """
    sims: list[frozenset] = [frozenset()]
    layer = [((i,), b) for i, b in enumerate(boxes)]
    sims.extend(frozenset(key) for key, _ in layer)
    while layer:
        nxt = []
        for key, cur in layer:
            for j in range(key[-1] + 1, len(boxes)):
                met = cur.meet(boxes[j])
                if met is not None:
                    nxt.append((key + (j,), met))
                    sims.append(frozenset(key + (j,)))
        layer = nxt
    return SimplicialComplex(sims, closed=False)


@dataclass(frozen=True)
class SlackViolation:
    subset: tuple[int, ...]
    dim: int


def is_acyclic_with_slack(F: SetFamily, s: int) -> tuple[bool, SlackViolation | None]:
    """Whether every subfamily intersection is homologically trivial in
    dimensions >= max(1, s - |G|); returns the first violation otherwise.

    Subsets are scanned in (size, lexicographic) order and dimensions
    ascending, so the reported violation is deterministic.
    """
    if s < 0:
        raise FamilyError("slack must be >= 0")
    n = len(F.members)
    for size in range(1, n + 1):
        for G in combinations(range(n), size):
            b = region_betti(F, G)
            cutoff = max(1, s - size)
            bad = sorted(d for d, v in b.items() if d >= cutoff and v)
            if bad:
                return False, SlackViolation(G, bad[0])
    return True, None


@dataclass(frozen=True)
class ComponentCountReport:
    value: int
    per_size: dict[int, int] = field(hash=False, default_factory=dict)


def max_components(F: SetFamily, t: int = 1) -> ComponentCountReport:
    """Max component count over subfamilies of size >= t, with per-size table."""
    if t < 1:
        raise FamilyError("t must be >= 1")
    n = len(F.members)
    per_size: dict[int, int] = {}
    best = 0
    for size in range(t, n + 1):
        m = 0
        for G in combinations(range(n), size):
            m = max(m, len(components(F, G)))
        per_size[size] = m
        best = max(best, m)
    return ComponentCountReport(best, per_size)
