"""Helly numbers and the bound pipeline, end to end.

For a family with empty intersection whose subfamilies of size at least t
meet in at most r components, each a rational homology cell up to slack s,
the Helly number obeys h <= r (max(d, s, t) + 1) where d is the homology
ceiling of the ambient space.  The chain of inequalities behind it is
checked numerically on every instance: J of the reduced multinerve, the
projection bound on L of the nerve, and the final Helly-Leray link.
"""

from multinerve import (helly_number, max_components, random_family,
                        region_is_empty, verify_helly_bound,
                        verify_projection_bound)
from multinerve.fixtures import (interval_union_h3_family,
                                 tight_interval_family)

# three intervals on the line: h = 2 meets the bound r (d + 1) = 2 exactly
tight = tight_interval_family()
res = helly_number(tight)
print("intervals: h =", res.h, "witness =", res.witness)
print(verify_helly_bound(tight, s=0, t=1).render())

# interval unions with r = 2: a minimal empty triple pushes h to 3
u = interval_union_h3_family()
print("interval unions: h =", helly_number(u).h,
      " r =", max_components(u, 1).value)
print(verify_helly_bound(u, s=0, t=1).render())

# randomized search over interval-union instances for more h >= 3 witnesses
hits = 0
for seed in range(60):
    F = random_family("box", 3, seed, ambient_dim=1, boxes_per_member=2)
    if not region_is_empty(F, range(3)):
        continue
    rep = verify_helly_bound(F, s=0, t=1)
    assert rep.all_pass
    if rep.quantities["r"] == 2 and rep.quantities["h"] >= 3:
        hits += 1
print(f"search: {hits} seeded instances with r = 2 and h >= 3, no violations")

# the projection machinery underneath, on one instance
print(verify_projection_bound(u, t=2, s=0).render())
