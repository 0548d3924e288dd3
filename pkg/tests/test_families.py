"""Intersection-component oracle: both backends, slack, component counts."""

import random
from fractions import Fraction

import pytest

from multinerve import (Box, FamilyError, box, box_family,
                        component_containing, components, grid_triangulation,
                        is_acyclic_with_slack, max_components, random_family,
                        region_betti, subcomplex_family)
from multinerve.fixtures import (box_ring_family, circle_member_family,
                                 corridor_box_family,
                                 interval_union_double_edge_family,
                                 two_arc_circle_family)


class TestBox:
    def test_degenerate_interval_rejected(self):
        with pytest.raises(FamilyError, match="lo < hi"):
            box((1, 1))

    def test_meet_is_strict(self):
        assert box((0, 1)).meet(box((1, 2))) is None
        assert box((0, 1)).meet(box((Fraction(1, 2), 2))) == \
            box((Fraction(1, 2), 1))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(FamilyError, match="dimension"):
            box_family(2, [[box((0, 1))]])


class TestComponents:
    def test_two_arc_instance_has_two_intersection_components(self):
        F = two_arc_circle_family()
        assert len(components(F, (0, 1))) == 2
        assert len(components(F, (0,))) == 1
        assert len(components(F, ())) == 1  # whole circle

    def test_interval_union_components(self):
        F = interval_union_double_edge_family()
        comps = components(F, (0, 1))
        assert len(comps) == 2
        # the two pieces are (1/2, 1) and (2, 5/2)
        reps = sorted(c.rep.intervals[0] for c in comps)
        assert reps == [(Fraction(1, 2), Fraction(1)),
                        (Fraction(2), Fraction(5, 2))]

    def test_single_convex_box_is_connected(self):
        F = box_family(2, [[box((0, 1), (0, 1))]])
        assert len(components(F, (0,))) == 1

    def test_unknown_member_index(self):
        F = box_family(1, [[box((0, 1))]])
        with pytest.raises(FamilyError, match="unknown member"):
            components(F, (5,))

    def test_determinism(self):
        F = two_arc_circle_family()
        assert components(F, (0, 1)) == components(F, (0, 1))

    def test_open_boxes_do_not_touch(self):
        # (0,1) and (1,2) share only the excluded point 1
        F = box_family(1, [[box((0, 1)), box((1, 2))]])
        assert len(components(F, (0,))) == 2


class TestComponentContaining:
    def test_subcomplex_lookup(self):
        F = two_arc_circle_family()
        target = component_containing(F, (0,), (1,))
        assert target == components(F, (0,))[0]

    def test_box_lookup(self):
        F = interval_union_double_edge_family()
        c = component_containing(F, (0,), box((Fraction(1, 2), 1)))
        assert c.rep.intervals[0] == (Fraction(0), Fraction(1))

    def test_outside_rep_rejected(self):
        F = interval_union_double_edge_family()
        with pytest.raises(FamilyError, match="outside"):
            component_containing(F, (0,), box((10, 11)))

    def test_singleton_connected_member(self):
        F = box_family(1, [[box((0, 2))]])
        assert component_containing(F, (0,), box((0, 1))) == components(F, (0,))[0]

    def test_refinement_consistency(self):
        # every component of a finer region lands in exactly one component
        # of every coarser region, found through its representative
        for F in (two_arc_circle_family(), interval_union_double_edge_family(),
                  corridor_box_family()):
            n = len(F)
            import itertools
            for size in range(2, n + 1):
                for A in itertools.combinations(range(n), size):
                    for comp in components(F, A):
                        for i in range(size):
                            B = A[:i] + A[i + 1:]
                            component_containing(F, B, comp.rep)


class TestRegionBetti:
    def test_crossing_boxes_are_contractible(self):
        F = box_family(2, [[box((0, 3), (1, 2))], [box((1, 2), (0, 3))]])
        assert region_betti(F, (0, 1)).is_trivial

    def test_box_ring_union_has_a_hole(self):
        assert region_betti(box_ring_family(), ())[1] == 1

    def test_two_arc_union_is_a_circle(self):
        assert region_betti(two_arc_circle_family(), ())[1] == 1

    def test_empty_region(self):
        F = box_family(1, [[box((0, 1))], [box((2, 3))]])
        assert region_betti(F, (0, 1))[-1] == 1

    def test_component_count_agrees_with_betti(self):
        # union-find and homology count components independently
        rng = random.Random(9)
        import itertools
        for seed in range(8):
            for backend in ("box", "subcomplex"):
                F = random_family(backend, 3, seed, ambient_dim=1, grid=3)
                for size in range(0, 4):
                    for A in itertools.combinations(range(3), size):
                        k = len(components(F, A))
                        b = region_betti(F, A)
                        if k == 0:
                            assert b[-1] == 1
                        else:
                            assert b[0] == k - 1

    def test_backends_agree_on_grid_encoded_boxes(self):
        # intervals with even endpoints, no tangencies: the open-box picture
        # and the closed grid-path picture are homotopy equivalent
        import itertools
        rng = random.Random(13)
        from multinerve import SimplicialComplex
        T = SimplicialComplex([(i, i + 1) for i in range(10)])
        pool = [(a, a + w) for a in (0, 2, 4, 6, 8) for w in (2, 4) if a + w <= 10]
        triples = [t for t in itertools.combinations(pool, 3)
                   if len({e for iv in t for e in iv}) == 6]
        for _ in range(20):
            intervals = rng.choice(triples)
            boxes = box_family(1, [[box(iv)] for iv in intervals])
            members = []
            for a, b in intervals:
                sims = [(i,) for i in range(a, b + 1)]
                sims += [(i, i + 1) for i in range(a, b)]
                members.append(sims)
            subs = subcomplex_family(T, members)
            import itertools
            for size in range(0, 4):
                for A in itertools.combinations(range(3), size):
                    assert region_betti(boxes, A) == region_betti(subs, A), \
                        (intervals, A)


class TestSlack:
    def test_convex_families_are_acyclic(self):
        F = box_family(2, [[box((0, 2), (0, 2))], [box((1, 3), (1, 3))]])
        ok, viol = is_acyclic_with_slack(F, 0)
        assert ok and viol is None

    def test_circle_member_needs_slack_3(self):
        F = circle_member_family()
        assert is_acyclic_with_slack(F, 3)[0]
        ok, viol = is_acyclic_with_slack(F, 2)
        assert not ok
        assert viol.subset == (0,) and viol.dim == 1

    def test_two_arc_family_is_acyclic(self):
        assert is_acyclic_with_slack(two_arc_circle_family(), 0)[0]

    def test_slack_zero_equals_slack_one(self):
        for seed in range(10):
            F = random_family("box", 3, seed, ambient_dim=1)
            assert is_acyclic_with_slack(F, 0)[0] == is_acyclic_with_slack(F, 1)[0]

    def test_first_violation_is_lexicographic(self):
        # two circle-shaped members: the violation must name member 0
        T = grid_triangulation(3)
        from multinerve.verify import ring_member
        F = subcomplex_family(T, [ring_member(3, 0, 0), ring_member(3, 1, 1)])
        ok, viol = is_acyclic_with_slack(F, 0)
        assert not ok and viol.subset == (0,) and viol.dim == 1


class TestMaxComponents:
    def test_convex_family(self):
        F = box_family(1, [[box((0, 2))], [box((1, 3))]])
        rep = max_components(F, 1)
        assert rep.value == 1

    def test_two_arc_instance(self):
        rep = max_components(two_arc_circle_family(), 1)
        assert rep.value == 2
        assert rep.per_size == {1: 1, 2: 2}

    def test_interval_union_with_threshold(self):
        F = interval_union_double_edge_family()
        assert max_components(F, 2).value == 2
        assert max_components(F, 1).value == 2

    def test_empty_intersections_count_zero(self):
        F = box_family(1, [[box((0, 1))], [box((2, 3))]])
        assert max_components(F, 2).value == 0


class TestRandomFamily:
    def test_deterministic(self):
        a = random_family("box", 3, 0, ambient_dim=1)
        b = random_family("box", 3, 0, ambient_dim=1)
        from multinerve.formats import write_family
        assert write_family(a) == write_family(b)

    def test_singleton(self):
        F = random_family("box", 1, 5)
        assert len(F) == 1

    def test_subcomplex_members_are_valid(self):
        # validity is enforced by the constructor; just build a few
        for seed in range(6):
            F = random_family("subcomplex", 4, seed, grid=4)
            assert len(F) == 4
            assert F.gamma_dim == 3  # dim(T) + 1

    def test_box_gamma_dim_defaults_to_dimension(self):
        assert random_family("box", 2, 0, ambient_dim=2).gamma_dim == 2
