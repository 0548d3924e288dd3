"""Helly numbers and theorem-level bound checks on concrete instances.

Every check here is proven mathematics: a FAIL indicts the implementation,
not the theorem, so reports embed enough quantities to rerun the instance.
Instances are keyed by a hash of their serialized form; failed instances can
be archived next to the report for regression.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .families import (SetFamily, box, box_family, is_acyclic_with_slack,
                       max_components, region_betti, region_is_empty,
                       subcomplex_family)
from .homology import BettiVector, reduced_betti
from .leray import CapExceeded, j_index, leray_number
from .nerve import canonical_projection, multinerve, nerve, reduced_multinerve
from .poset import SimplicialComplex


class PreconditionError(ValueError):
    """A verification op was called on an instance outside its hypotheses."""


@dataclass(frozen=True)
class HellyResult:
    h: int
    witness: tuple[int, ...]


def helly_number(F: SetFamily, cap: int = 16,
                 max_size: int | None = None) -> HellyResult:
    """Largest inclusion-wise minimal subfamily with empty intersection.

    Requires the whole family to have empty intersection.  ``max_size``
    prunes the enumeration for callers that already trust an upper bound;
    the default is bound-agnostic so bound checks stay non-circular.
    """
    n = len(F)
    if n > cap:
        raise CapExceeded(n, cap, what="member count")
    if not region_is_empty(F, range(n)):
        raise PreconditionError("family has non-empty intersection")
    alive: dict[tuple[int, ...], bool] = {}

    def is_alive(G: tuple[int, ...]) -> bool:
        if G not in alive:
            alive[G] = not region_is_empty(F, G)
        return alive[G]

    best, witness = 0, ()
    top = n if max_size is None else min(n, max_size)
    for size in range(1, top + 1):
        for G in combinations(range(n), size):
            if is_alive(G):
                continue
            # the empty subfamily counts as intersecting by convention
            if all(is_alive(G[:i] + G[i + 1:]) for i in range(size)):
                if size > best:
                    best, witness = size, G
    if best == 0:
        raise AssertionError("empty total intersection admits a minimal witness")
    return HellyResult(best, witness)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: int
    op: str = "<="

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs if self.op == "<=" else self.lhs == self.rhs

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name}: {self.lhs} {self.op} {self.rhs} : {verdict}"


@dataclass
class BoundReport:
    instance: str
    quantities: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render(self) -> str:
        lines = ["report v1", f"instance = {self.instance}"]
        for k, v in self.quantities.items():
            lines.append(f"{k} = {v}")
        lines.extend(c.render() for c in self.checks)
        lines.append(f"result = {'PASS' if self.all_pass else 'FAIL'}")
        return "\n".join(lines) + "\n"


def instance_id(F: SetFamily) -> str:
    from .formats import write_family
    return hashlib.sha256(write_family(F).encode()).hexdigest()[:12]


def _fmt_betti(b: BettiVector) -> str:
    return ",".join(f"{d}:{v}" for d, v in b.items()) or "0"


# ---------------------------------------------------------------------------
# theorem checks


def verify_multinerve_theorem(F: SetFamily, s: int) -> BoundReport:
    """Check that the multinerve has the homology of the union from slack up.

    Precondition: the family is acyclic with slack s (verified; a violation
    is reported as an error naming the offending subfamily and dimension).
    """
    ok, viol = is_acyclic_with_slack(F, s)
    if not ok:
        raise PreconditionError(
            f"family is not acyclic with slack {s}: "
            f"subfamily {viol.subset} has nonzero reduced homology in "
            f"dimension {viol.dim}")
    M = multinerve(F)
    bm = reduced_betti(M.poset)
    bu = region_betti(F, ())
    report = BoundReport(instance_id(F))
    report.quantities.update({
        "s": s,
        "betti_multinerve": _fmt_betti(bm),
        "betti_union": _fmt_betti(bu),
    })
    top = max([d for d, _ in bm.items()] + [d for d, _ in bu.items()] + [0])
    for ell in range(max(s, 0), top + 1):
        report.checks.append(Check(f"multinerve_theorem_dim_{ell}",
                                   bm[ell], bu[ell], op="=="))
    return report


def verify_projection_bound(F: SetFamily, t: int = 1, s: int | None = None,
                            cap: int = 16,
                            artifacts_dir: str | Path | None = None) -> BoundReport:
    """Check the projection bound L(N) <= r J(M_red) + r - 1 and its lemmas.

    Also checks L <= J on the posets in play, the quotient bound
    J(M_red) <= max(J(M), t), the slack bound J(M) <= max(d_Gamma, s) when a
    verified slack is supplied, and the Helly-Leray link when the family has
    empty intersection.  Posets found with L < J are archived as
    counterexample candidates rather than asserted either way.
    """
    M = multinerve(F)
    R, f = reduced_multinerve(F, t)
    pi = canonical_projection(R)
    if not (pi.monotone and pi.dimension_preserving):
        raise AssertionError("projection lost monotonicity or dimension")
    N = nerve(F)
    r = pi.max_fiber

    j_m = j_index(M.poset, cap=cap).value
    j_r = j_index(R.poset, cap=cap).value
    j_n = j_index(N, cap=cap).value
    l_m = leray_number(M.poset, cap=cap).value
    l_r = leray_number(R.poset, cap=cap).value
    l_n = leray_number(N, cap=cap).value

    report = BoundReport(instance_id(F))
    q = report.quantities
    q.update({"t": t, "r": r, "gamma_dim": F.gamma_dim,
              "J_multinerve": j_m, "J_reduced": j_r, "J_nerve": j_n,
              "L_multinerve": l_m, "L_reduced": l_r, "L_nerve": l_n,
              "quotient_bijective_from_dim": t - 1,
              "quotient_ok": f.monotone and f.dimension_preserving
              and f.bijective_on_dims_at_least(t - 1)})
    if F.gamma_dim_assumed:
        q["gamma_dim_assumed"] = True

    report.checks.append(Check("projection_bound", l_n, r * j_r + r - 1))
    report.checks.append(Check("L_le_J_multinerve", l_m, j_m))
    report.checks.append(Check("L_le_J_reduced", l_r, j_r))
    report.checks.append(Check("L_le_J_nerve", l_n, j_n))
    report.checks.append(Check("quotient_J_bound", j_r, max(j_m, t)))
    if s is not None:
        ok, viol = is_acyclic_with_slack(F, s)
        if not ok:
            raise PreconditionError(
                f"family is not acyclic with slack {s}: subfamily "
                f"{viol.subset} violates at dimension {viol.dim}")
        q["s"] = s
        report.checks.append(Check("slack_J_bound", j_m, max(F.gamma_dim, s)))
        if s <= 1:
            report.checks.append(Check("multinerve_leray_bound",
                                       l_m, F.gamma_dim))
    if region_is_empty(F, range(len(F))):
        h = helly_number(F, cap=cap).h
        q["h"] = h
        report.checks.append(Check("helly_leray", h, l_n + 1))

    if artifacts_dir is not None:
        if l_m < j_m:
            _record_lj_candidate(M.poset, l_m, j_m, artifacts_dir,
                                 f"{report.instance}-multinerve")
        if l_r < j_r:
            _record_lj_candidate(R.poset, l_r, j_r, artifacts_dir,
                                 f"{report.instance}-reduced")
    return report


def verify_helly_bound(F: SetFamily, s: int = 0, t: int = 1,
                       cap: int = 16) -> BoundReport:
    """Check h <= r (max(d_Gamma, s, t) + 1) on an empty-intersection family."""
    if not region_is_empty(F, range(len(F))):
        raise PreconditionError("family has non-empty intersection")
    ok, viol = is_acyclic_with_slack(F, s)
    if not ok:
        raise PreconditionError(
            f"family is not acyclic with slack {s}: subfamily {viol.subset} "
            f"violates at dimension {viol.dim}")
    r = max_components(F, t).value
    h = helly_number(F, cap=cap).h
    l_n = leray_number(nerve(F), cap=cap).value
    bound = r * (max(F.gamma_dim, s, t) + 1)
    report = BoundReport(instance_id(F))
    report.quantities.update({"s": s, "t": t, "r": r,
                              "gamma_dim": F.gamma_dim, "h": h,
                              "L_nerve": l_n, "bound": bound})
    if F.gamma_dim_assumed:
        report.quantities["gamma_dim_assumed"] = True
    report.checks.append(Check("helly_bound", h, bound))
    report.checks.append(Check("helly_leray", h, l_n + 1))
    return report


def _record_lj_candidate(P, L: int, J: int, directory, name: str) -> Path:
    from .formats import write_poset
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{name}.poset"
    path.write_text(write_poset(P), encoding="utf-8")
    note = directory / f"{name}.note"
    note.write_text(f"counterexample candidate: L={L} < J={J}\n",
                    encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# instance generation


def grid_triangulation(g: int) -> SimplicialComplex:
    """Standard triangulation of a g-by-g square grid; vertices are ints."""
    def v(i: int, j: int) -> int:
        return i * (g + 1) + j

    tris = []
    for i in range(g):
        for j in range(g):
            tris.append((v(i, j), v(i + 1, j), v(i, j + 1)))
            tris.append((v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)))
    return SimplicialComplex(tris)


def closed_star(T: SimplicialComplex, vertex: int) -> set[frozenset]:
    """All simplices touching the vertex, plus their faces."""
    star = {s for s in T.simplices if vertex in s}
    out = set()
    for s in star:
        out.add(s)
        for v in s:
            out.add(s - {v})
            for w in s - {v}:
                out.add(s - {v, w})
    return {s for s in out if s}


def ring_member(g: int, i: int, j: int) -> set[frozenset]:
    """Boundary 4-cycle of grid square (i, j): a member with the homology
    of a circle (the diagonal edge is deliberately omitted)."""
    def v(a: int, b: int) -> int:
        return a * (g + 1) + b

    c = [v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)]
    out: set[frozenset] = set()
    for k in range(4):
        out.add(frozenset((c[k],)))
        out.add(frozenset((c[k], c[(k + 1) % 4])))
    return out


def random_family(backend: str, n: int, seed: int, *,
                  ambient_dim: int = 1, boxes_per_member: int = 2,
                  grid: int = 4, stars_per_member: int = 2,
                  gamma_dim: int | None = None,
                  with_ring: bool = False) -> SetFamily:
    """Reproducible pseudo-random family for the given backend.

    Box members draw rational endpoints on a half-integer grid; subcomplex
    members are unions of closed stars in a grid triangulation (plus one
    circle-shaped member when ``with_ring`` is set, for slack instances).
    """
    if n < 1:
        raise ValueError("need at least one member")
    rng = random.Random(seed)
    if backend == "box":
        members = []
        for _ in range(n):
            boxes = []
            for _ in range(boxes_per_member):
                intervals = []
                for _ in range(ambient_dim):
                    a = rng.randrange(0, 13)
                    b = a + rng.randrange(2, 7)
                    intervals.append((Fraction(a, 2), Fraction(b, 2)))
                boxes.append(box(*intervals))
            members.append(boxes)
        return box_family(ambient_dim, members, gamma_dim)
    if backend == "subcomplex":
        T = grid_triangulation(grid)
        members = []
        ring_at = rng.randrange(n) if with_ring else -1
        for k in range(n):
            if k == ring_at:
                i = rng.randrange(grid)
                j = rng.randrange(grid)
                members.append(ring_member(grid, i, j))
                continue
            sims: set[frozenset] = set()
            for _ in range(stars_per_member):
                sims |= closed_star(T, rng.choice(T.vertices))
            members.append(sims)
        return subcomplex_family(T, members, gamma_dim)
    raise ValueError(f"unknown backend {backend!r}")
