"""Leray number L(X) and the index J(X) of a simplicial poset.

Both are computed by exhaustive enumeration over induced subposets, which is
exponential in the vertex count; the cap refuses larger inputs explicitly
and a sampling mode gives labeled lower bounds instead.

L(X) asks that every induced subposet has vanishing reduced homology from
some dimension up.  J(X) asks the same of the order complexes of all open
upper intervals in all induced subposets (the least element included, whose
upper interval complex is the barycentric subdivision).  L <= J always; on
simplicial complexes they agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .homology import top_nonzero_betti, chain_complex
from .poset import SimplicialComplex, SimplicialPoset, order_complex


class CapExceeded(RuntimeError):
    """Exact enumeration refused because the vertex cap was exceeded."""

    def __init__(self, n: int, cap: int, what: str = "vertex count"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} {n} exceeds cap {cap}; "
                         "raise --cap or use sampling mode")


@dataclass(frozen=True)
class Witness:
    """Vertex set, dimension, and (for J) cell attaining nonzero homology.

    For poset inputs these are cell ids; for complex inputs they are the
    complex's own vertex labels and the simplex as a vertex tuple.
    """

    S: tuple
    j: int
    sigma: object | None = None


@dataclass(frozen=True)
class LerayReport:
    value: int
    mode: str  # "exact" or "sampled"
    witness: Witness | None

    @property
    def exact(self) -> bool:
        return self.mode == "exact"


Space = Union[SimplicialPoset, SimplicialComplex]


def _as_poset(X: Space) -> SimplicialPoset:
    return X.as_poset() if isinstance(X, SimplicialComplex) else X


def _translate_witness(X: Space, w: Witness | None) -> Witness | None:
    """Rewrite a poset-id witness in the vertex labels of a complex input."""
    if w is None or not isinstance(X, SimplicialComplex):
        return w
    S = tuple(sorted(X.cell_label(v)[0] for v in w.S))
    sigma = None if w.sigma is None else X.cell_label(w.sigma)
    return Witness(S, w.j, sigma)


def _betti_at(X, n: int) -> int:
    cc = chain_complex(X)
    if n > cc.top or n < -1:
        return 0
    return cc.size(n) - cc.rank_boundary(n) - cc.rank_boundary(n + 1)


def leray_number(X: Space, cap: int = 16,
                 sample: int | None = None, seed: int = 0) -> LerayReport:
    """Exact L(X), or a sampled lower bound when ``sample`` is given."""
    P = _as_poset(X)
    V = list(P.vertex_order)
    if sample is not None:
        return _leray_sampled(P, sample, seed)
    if len(V) > cap:
        raise CapExceeded(len(V), cap)

    best = 0
    ceiling = P.dim + 1
    for size in range(len(V), -1, -1):
        if best == ceiling:
            break
        for S in combinations(V, size):
            XS = P.induced_subposet(S)
            if XS.dim + 1 <= best:
                continue
            j = top_nonzero_betti(XS, floor=best)
            if j is not None:
                best = j + 1
                if best == ceiling:
                    break

    witness = None
    if best > 0:
        witness = _translate_witness(X, _leray_witness(P, V, best))
    return LerayReport(best, "exact", witness)


def _leray_witness(P: SimplicialPoset, V: list, value: int) -> Witness:
    for size in range(0, len(V) + 1):
        for S in combinations(sorted(V), size):
            XS = P.induced_subposet(S)
            if XS.dim < value - 1:
                continue
            if _betti_at(XS, value - 1):
                return Witness(S, value - 1)
    raise AssertionError("no witness found for computed Leray number")


def j_index(X: Space, cap: int = 16,
            sample: int | None = None, seed: int = 0) -> LerayReport:
    """Exact J(X), or a sampled lower bound when ``sample`` is given."""
    P = _as_poset(X)
    V = list(P.vertex_order)
    if sample is not None:
        return _j_sampled(P, sample, seed)
    if len(V) > cap:
        raise CapExceeded(len(V), cap)

    best = 0
    ceiling = P.dim + 1
    for size in range(len(V), -1, -1):
        if best == ceiling:
            break
        for S in combinations(V, size):
            XS = P.induced_subposet(S)
            if XS.dim + 1 <= best:
                continue
            cand = _j_over_cells(XS, best)
            if cand is not None:
                best = cand
                if best == ceiling:
                    break

    witness = None
    if best > 0:
        witness = _translate_witness(X, _j_witness(P, V, best))
    return LerayReport(best, "exact", witness)


def _is_cone_interval(XS: SimplicialPoset, up: list) -> bool:
    """Whether the interval has a maximum or minimum element.

    Its order complex is then a cone with that apex, so every reduced Betti
    number vanishes; skipping these avoids building large subdivisions of
    simplex-like regions.  (In a finite poset a unique maximal element is a
    maximum, and dually.)
    """
    n_max = sum(1 for t in up
                if not any(u != t and XS.leq(t, u) for u in up))
    if n_max == 1:
        return True
    n_min = sum(1 for t in up
                if not any(u != t and XS.leq(u, t) for u in up))
    return n_min == 1


def _j_over_cells(XS: SimplicialPoset, best: int) -> int | None:
    """Best achievable value from all upper intervals of XS, above ``best``."""
    found = None
    floor = best
    for sigma in XS.cells():
        # dim of the open upper interval complex is at most dim - dim(sigma) - 1
        if XS.dim - XS.dim_of(sigma) <= floor:
            continue
        up = XS.strictly_above(sigma)
        if not up:
            continue
        if _is_cone_interval(XS, up):
            continue
        ddot = order_complex(up, XS.leq)
        if ddot.dim + 1 <= floor:
            continue
        j = top_nonzero_betti(ddot, floor=floor)
        if j is not None:
            found = j + 1
            floor = found
            if found == XS.dim + 1:
                break
    return found


def _j_witness(P: SimplicialPoset, V: list, value: int) -> Witness:
    for size in range(0, len(V) + 1):
        for S in combinations(sorted(V), size):
            XS, old_ids = P.induced_with_map(S)
            if XS.dim < value - 1:
                continue
            for sigma in XS.cells():
                if XS.dim - XS.dim_of(sigma) < value:
                    continue
                up = XS.strictly_above(sigma)
                if not up or _is_cone_interval(XS, up):
                    continue
                ddot = order_complex(up, XS.leq)
                if ddot.dim < value - 1:
                    continue
                if _betti_at(ddot, value - 1):
                    return Witness(S, value - 1, old_ids[sigma])
    raise AssertionError("no witness found for computed J index")


def _random_subset(rng: random.Random, V: list) -> tuple:
    return tuple(v for v in V if rng.random() < 0.5)


def _leray_sampled(P: SimplicialPoset, draws: int, seed: int) -> LerayReport:
    rng = random.Random(seed)
    best, witness = 0, None
    for _ in range(draws):
        S = _random_subset(rng, list(P.vertex_order))
        XS = P.induced_subposet(S)
        if XS.dim + 1 <= best:
            continue
        j = top_nonzero_betti(XS, floor=best)
        if j is not None:
            best = j + 1
            witness = Witness(S, j)
    return LerayReport(best, "sampled", witness)


def _j_sampled(P: SimplicialPoset, draws: int, seed: int) -> LerayReport:
    rng = random.Random(seed)
    best, witness = 0, None
    for _ in range(draws):
        S = _random_subset(rng, list(P.vertex_order))
        XS, old_ids = P.induced_with_map(S)
        if XS.n_cells <= 1:
            continue
        sigma = rng.randrange(XS.n_cells)
        up = XS.strictly_above(sigma)
        if not up:
            continue
        ddot = order_complex(up, XS.leq)
        if ddot.dim + 1 <= best:
            continue
        j = top_nonzero_betti(ddot, floor=best)
        if j is not None:
            best = j + 1
            witness = Witness(S, j, old_ids[sigma])
    return LerayReport(best, "sampled", witness)


def is_simplex(X: Space) -> bool:
    """Whether the space is a (possibly empty) single simplex with its faces."""
    P = _as_poset(X)
    return P.is_simplex()


def format_leray(report: LerayReport, kind: str = "leray") -> str:
    """Serialize a report in the leray.v1 line format."""
    lines = ["leray v1", f"kind {kind}", f"value {report.value}",
             f"mode {report.mode}"]
    if report.witness is not None:
        w = report.witness
        sig = "" if w.sigma is None else f" sigma={w.sigma}"
        lines.append(f"witness S={','.join(str(v) for v in w.S)} j={w.j}{sig}")
    return "\n".join(lines) + "\n"
