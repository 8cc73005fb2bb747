from fractions import Fraction

import pytest

from conftest import SEGMENT2, SQUARE, TWISTED_CUBIC, config_of, secondary_of
from toricsec.hull import RELATIVE_INTERIOR
from toricsec.stability import (
    StabilityReport,
    diagonal_point,
    project_to_H,
    stability_verdict,
    verify_main_theorem,
    weight_polytope_H,
)

SIMPLEX2 = ((0, 0), (1, 0), (0, 1))
SIMPLEX3 = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def combo(coeffs, vertices):
    return tuple(sum(c * v[i] for c, v in zip(coeffs, vertices)) for i in range(len(vertices[0])))


def test_projection_examples():
    assert project_to_H((1, 2, 1)) == (0, 1)
    assert project_to_H((2, 0, 2)) == (0, -2)
    assert project_to_H((Fraction(5, 3),) * 4) == (0, 0, 0)


def test_projection_is_linear():
    u, v = (1, 4, -2, 3), (0, 5, 7, -1)
    assert project_to_H([a + 3 * b for a, b in zip(u, v)]) == tuple(
        a + 3 * b for a, b in zip(project_to_H(u), project_to_H(v))
    )


def test_weight_polytope_examples():
    seg = weight_polytope_H(config_of(SEGMENT2), secondary_of(SEGMENT2))
    assert set(seg.vertices) == {(0, 1), (0, -2)}
    sq = weight_polytope_H(config_of(SQUARE), secondary_of(SQUARE))
    # (2,1,1,2) projects to (0,-1,-1), so the origin is the midpoint
    assert set(sq.vertices) == {(0, -1, -1), (0, 1, 1)}
    tri = weight_polytope_H(config_of(SIMPLEX2), secondary_of(SIMPLEX2))
    assert tri.vertices == ((0, 0),)


def test_conic_verdict():
    r = stability_verdict(config_of(SEGMENT2), secondary_of(SEGMENT2))
    assert r.degree == 2 and r.semistable and r.polystable
    verts = weight_polytope_H(config_of(SEGMENT2), secondary_of(SEGMENT2)).vertices
    coeffs = dict(zip(verts, r.certificate.coefficients))
    assert coeffs == {(0, 1): Fraction(2, 3), (0, -2): Fraction(1, 3)}


def test_square_verdict():
    r = stability_verdict(config_of(SQUARE), secondary_of(SQUARE))
    assert r.semistable and r.polystable
    assert r.certificate.coefficients == (Fraction(1, 2), Fraction(1, 2))


def test_twisted_cubic_verdict_and_hand_certificate():
    config, sec = config_of(TWISTED_CUBIC), secondary_of(TWISTED_CUBIC)
    r = stability_verdict(config, sec)
    assert r.semistable and r.polystable
    projected = {v: project_to_H(v) for v in [(1, 2, 2, 1), (1, 3, 0, 2), (2, 0, 3, 1), (3, 0, 0, 3)]}
    hand = [Fraction(3, 8), Fraction(1, 4), Fraction(1, 4), Fraction(1, 8)]
    assert combo(hand, list(projected.values())) == (0, 0, 0)
    verts = weight_polytope_H(config, sec).vertices
    assert combo(r.certificate.coefficients, verts) == (0, 0, 0)
    assert all(c > 0 for c in r.certificate.coefficients)


def test_diagonal_point_examples():
    d = diagonal_point(config_of(SEGMENT2), secondary_of(SEGMENT2))
    assert d.t == Fraction(4, 3) and d.location == RELATIVE_INTERIOR
    # parameter s = 1/3 along (1,2,1) -> (2,0,2)
    assert d.membership.coefficients == (Fraction(2, 3), Fraction(1, 3))
    d = diagonal_point(config_of(SQUARE), secondary_of(SQUARE))
    assert d.t == Fraction(3, 2) and d.location == RELATIVE_INTERIOR
    assert d.membership.coefficients == (Fraction(1, 2), Fraction(1, 2))
    for pts in (SIMPLEX2, SIMPLEX3):
        d = diagonal_point(config_of(pts), secondary_of(pts))
        assert d.t == 1 and d.location == RELATIVE_INTERIOR


@pytest.mark.parametrize("points", [SEGMENT2, SQUARE, TWISTED_CUBIC])
def test_theorem_holds_in_degree_at_least_two(points):
    report = verify_main_theorem(config_of(points), secondary_of(points))
    assert report.degree >= 2 and report.status == "holds"
    assert report.semistable == report.polystable
    assert report.projection_injective
    assert not report.relation_holds


@pytest.mark.parametrize("points", [SIMPLEX2, SIMPLEX3])
def test_degree_one_takes_the_exception_path(points):
    report = verify_main_theorem(config_of(points), secondary_of(points))
    assert report.degree == 1 and report.exception_path
    assert report.relation_holds and report.points == report.scaled_volume
    assert report.status == "exception: degree 1"


def test_polystable_implies_semistable_is_enforced():
    with pytest.raises(AssertionError):
        StabilityReport(2, False, True, Fraction(1), False, None)


def test_interior_diagonal_has_no_tight_facets():
    report = verify_main_theorem(config_of(TWISTED_CUBIC), secondary_of(TWISTED_CUBIC))
    assert report.diagonal_location == RELATIVE_INTERIOR
    assert all(f.slack > 0 for f in report.facet_slacks)
