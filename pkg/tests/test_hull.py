from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsec.hull import (
    BOUNDARY,
    OUTSIDE,
    RELATIVE_INTERIOR,
    VPolytope,
    convex_hull,
    in_ambient_interior,
    lattice_points,
    lower_faces,
    point_in_polytope,
    simplex_volume,
    volume,
)

SQUARE = ((0, 0), (1, 0), (0, 1), (1, 1))


def test_hull_of_collinear_points():
    v, h = convex_hull([(0,), (1,), (2,)])
    assert set(v.vertices) == {(0,), (2,)}


def test_hull_of_square():
    v, h = convex_hull(SQUARE)
    assert len(v.vertices) == 4
    assert len(h.inequalities) == 4 and len(h.equations) == 0


def test_hull_of_gkz_segment():
    v, h = convex_hull([(1, 2, 1), (2, 0, 2)])
    assert set(v.vertices) == {(1, 2, 1), (2, 0, 2)}
    assert len(h.equations) == 2 and h.dim == 1


def test_lower_faces_examples():
    lifted = [p + (w,) for p, w in zip(SQUARE, (0, 0, 0, 1))]
    assert sorted(lower_faces(lifted)) == [(0, 1, 2), (1, 2, 3)]
    assert lower_faces([p + (0,) for p in SQUARE]) == [(0, 1, 2, 3)]
    assert lower_faces([(0, 0), (1, 1), (2, 0)]) == [(0, 2)]


def test_simplex_volume_examples():
    assert simplex_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], (0, 1, 2, 3)) == Fraction(1, 6)
    assert simplex_volume([(0, 0), (1, 1), (2, 2)], (0, 1, 2)) == 0
    assert simplex_volume([(0, 0), (1, 0), (1, 2)], (0, 1, 2)) == 1


def test_lattice_point_examples():
    assert lattice_points(convex_hull([(0,), (2,)])[1]) == [(0,), (1,), (2,)]
    assert len(lattice_points(convex_hull(SQUARE)[1], 2)) == 9
    assert len(lattice_points(convex_hull([(0, 0), (1, 0), (0, 1)])[1], 3)) == 10


def test_membership_examples():
    seg = VPolytope(3, ((1, 2, 1), (2, 0, 2)))
    m = point_in_polytope((Fraction(4, 3),) * 3, seg)
    assert m.location == RELATIVE_INTERIOR
    assert m.coefficients == (Fraction(2, 3), Fraction(1, 3))
    # the midpoint-like point (3/2,3/2,3/2) is not on that segment
    assert point_in_polytope((Fraction(3, 2),) * 3, seg).location == OUTSIDE
    sq = VPolytope(2, SQUARE)
    assert point_in_polytope((1, 0), sq).location == BOUNDARY
    assert point_in_polytope((3, 3), VPolytope(2, ((3, 3),))).location == RELATIVE_INTERIOR


def test_outside_carries_separator():
    poly = VPolytope(2, ((1, 2), (2, 0)))
    m = point_in_polytope((0, 1), poly)
    assert m.location == OUTSIDE
    normal, offset = m.separator
    assert sum(a * b for a, b in zip(normal, (0, 1))) < offset
    assert all(sum(a * b for a, b in zip(normal, v)) >= offset for v in poly.vertices)


def test_relative_vs_ambient_interior():
    seg = VPolytope(2, ((0, 0), (2, 2)))
    assert point_in_polytope((1, 1), seg).location == RELATIVE_INTERIOR
    assert not in_ambient_interior((1, 1), seg)
    assert in_ambient_interior((Fraction(1, 2), Fraction(1, 2)), VPolytope(2, SQUARE))


points2 = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=8, unique=True)


def _full(pts):
    from toricsec.hull import affine_hull

    return affine_hull(pts)[0] == 2


@settings(max_examples=40, deadline=None)
@given(points2)
def test_hull_idempotent_and_consistent(pts):
    if not _full(pts):
        return
    v, h = convex_hull(pts)
    v2, h2 = convex_hull(v.vertices)
    assert set(v2.vertices) == set(v.vertices)
    assert set(h2.inequalities) == set(h.inequalities)
    # every input point satisfies the H-description; vertices are tight on >= 2 facets
    assert all(h.contains(p) for p in pts)
    for x in v.vertices:
        tight = sum(1 for c, b in h.inequalities if sum(a * y for a, y in zip(c, x)) == b)
        assert tight >= 2


@settings(max_examples=30, deadline=None)
@given(points2, st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_volume_invariances(pts, shift):
    if not _full(pts):
        return
    vol = volume(pts)
    assert volume([(x + shift[0], y + shift[1]) for x, y in pts]) == vol
    assert volume(list(reversed(pts))) == vol
    assert volume([(y, x) for x, y in pts]) == vol
    # shear is unimodular
    assert volume([(x + y, y) for x, y in pts]) == vol


def test_volume_permutation_invariance():
    base = volume(SQUARE)
    assert all(volume(p) == base for p in permutations(SQUARE))


def test_lower_faces_rejects_low_dimensional_base():
    with pytest.raises(ValueError):
        lower_faces([(0, 0, 0), (1, 1, 0), (2, 2, 1)])
