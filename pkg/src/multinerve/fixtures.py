"""Canonical small instances used by the test suite and the demo scripts.

``two_arc_circle_family`` is the classic two-member cover of a circle whose
union is a circle but whose nerve is contractible; its multinerve is the
double-edge poset.  ``blown_tetrahedron_family`` is a four-member acyclic
family whose multinerve is contractible while its nerve is the boundary of
a tetrahedron.
"""

from __future__ import annotations

from fractions import Fraction

from .families import SetFamily, box, box_family, subcomplex_family
from .poset import SimplicialComplex, SimplicialPoset, build_poset


def double_edge_poset() -> SimplicialPoset:
    """Two vertices joined by two distinct edges; realizes a circle."""
    return build_poset([
        (-1, ()),
        (0, (0,)),
        (0, (0,)),
        (1, (2, 1)),
        (1, (2, 1)),
    ])


def cycle_complex(k: int) -> SimplicialComplex:
    """The k-cycle graph as a complex."""
    return SimplicialComplex((i, (i + 1) % k) for i in range(k))


def two_arc_circle_family() -> SetFamily:
    """Two paths covering the 4-cycle, meeting in two opposite vertices."""
    T = cycle_complex(4)
    upper = [(3,), (0,), (1,), (3, 0), (0, 1)]
    lower = [(1,), (2,), (3,), (1, 2), (2, 3)]
    return subcomplex_family(T, [upper, lower])


def blown_tetrahedron_family() -> SetFamily:
    """Four subcomplexes of a path: every triple meets, the quadruple does
    not, and the union is the whole (contractible) path.

    The nerve is the boundary of the 3-simplex; the multinerve is
    contractible because every region is a disjoint union of subpaths.
    """
    T = SimplicialComplex((i, i + 1) for i in range(4))
    seg = lambda a, b: [(i,) for i in range(a, b + 1)] + \
        [(i, i + 1) for i in range(a, b)]
    A = seg(0, 3)
    B = seg(1, 2) + [(4,)]
    C = [(1,)] + seg(3, 4)
    D = seg(2, 4)
    return subcomplex_family(T, [A, B, C, D])


def corridor_box_family() -> SetFamily:
    """Three box unions in the plane, pairwise meeting with empty triple
    intersection; the nerve is the boundary of a triangle."""
    bottom = [box((0, 3), (0, 1))]
    left = [box((0, 1), (0, 3))]
    hook = [box((2, 3), (0, 3)), box((0, 3), (2, 3))]
    return box_family(2, [bottom, left, hook])


def tight_interval_family() -> SetFamily:
    """Three intervals with Helly number 2, matching the r=1 bound exactly."""
    members = [[box((0, 2))], [box((1, 3))], [box((Fraction(5, 2), 4))]]
    return box_family(1, members)


def interval_union_h3_family() -> SetFamily:
    """Interval-union members (r = 2) with a minimal empty triple: h = 3."""
    A = [box((0, 1)), box((2, 3))]
    B = [box((Fraction(1, 2), Fraction(5, 2)))]
    C = [box((Fraction(6, 5), Fraction(9, 5))), box((Fraction(13, 5), Fraction(17, 5)))]
    return box_family(1, [A, B, C])


def interval_union_double_edge_family() -> SetFamily:
    """Two members of the real line whose intersection has two components."""
    A = [box((0, 1)), box((2, 3))]
    B = [box((Fraction(1, 2), Fraction(5, 2)))]
    return box_family(1, [A, B])


def box_circle_cover_family() -> SetFamily:
    """Two connected box unions covering a square ring: a C-shape and a bar.

    Their intersection has two components, so the multinerve is the
    double-edge poset while the nerve is a single edge.
    """
    c_shape = [box((0, 3), (0, 1)), box((0, 1), (0, 3)), box((0, 3), (2, 3))]
    bar = [box((2, 3), (0, 3))]
    return box_family(2, [c_shape, bar])


def box_ring_family() -> SetFamily:
    """Four convex boxes arranged in a ring; the union has a hole."""
    members = [
        [box((0, 3), (0, 1))],
        [box((2, 3), (0, 3))],
        [box((0, 3), (2, 3))],
        [box((0, 1), (0, 3))],
    ]
    return box_family(2, members)


def circle_member_family() -> SetFamily:
    """One member triangulating a circle: acyclic with slack 3, not 2."""
    T = cycle_complex(4)
    member = [(i,) for i in range(4)] + [(i, (i + 1) % 4) for i in range(4)]
    return subcomplex_family(T, [member])
