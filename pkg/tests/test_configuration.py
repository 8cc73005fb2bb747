import pytest

from toricsec import ConfigurationError, PointConfiguration, StarViolation, require_star, validate_star


def test_segment_is_valid():
    assert validate_star(PointConfiguration(((0,), (1,), (2,)))).valid


def test_gap_is_reported():
    check = validate_star(PointConfiguration(((0,), (2,))))
    assert not check.valid
    assert check.message == "missing lattice point 1"
    assert check.missing == (1,)


def test_square_is_valid():
    check = validate_star(PointConfiguration(((0, 0), (1, 0), (0, 1), (1, 1))))
    assert check.valid and check.invariant_factors == (1, 1)


def test_reeve_tetrahedron_has_index_two():
    # no missing lattice points, but the differences span a sublattice of index 2
    config = PointConfiguration(((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)))
    check = validate_star(config)
    assert not check.valid
    assert check.index == 2
    with pytest.raises(StarViolation):
        require_star(config)


def test_triangle_with_edge_point_missing():
    check = validate_star(PointConfiguration(((0, 0), (1, 0), (1, 2))))
    assert check.message == "missing lattice point (1,1)"


@pytest.mark.parametrize(
    "points",
    [(), ((0,), (0,)), ((0, 0), (1, 1), (2, 2)), ((0,), (1, 0))],
)
def test_malformed_configurations(points):
    with pytest.raises(ConfigurationError):
        PointConfiguration(points)


def test_degree_and_volume():
    cube = PointConfiguration(tuple((a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)))
    assert cube.volume == 1 and cube.degree == 6
    assert cube.N == 7 and cube.n == 3
    assert cube.vertex_labels == frozenset(range(8))
