import pytest

from aluffi import (Ideal, PointSet, PolyRing, ideal_of_points,
                    jacobian_ideal, parse_poly)
from aluffi.worked_examples import coordinate_points, standard_frame_points

__all__ = ["coordinate_points", "standard_frame_points"]


@pytest.fixture(scope="session")
def plane_ring():
    return PolyRing(3)


@pytest.fixture(scope="session")
def four_points():
    """The four-point configuration in P^2 with its ideal pair (J, I)."""
    ps = standard_frame_points(2)
    j = ideal_of_points(ps)
    i = jacobian_ideal(j, 2)
    return ps, j, i


@pytest.fixture(scope="session")
def collinear_triple():
    ps = PointSet(2, ((0, 1, 0), (0, 0, 1), (0, 1, 1)))
    j = ideal_of_points(ps)
    i = jacobian_ideal(j, 2)
    return ps, j, i


@pytest.fixture(scope="session")
def six_points():
    """Six points in P^3 (the standard frame plus (-1:2:3:1))."""
    return PointSet(3, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
                        (0, 0, 0, 1), (1, 1, 1, 1), (-1, 2, 3, 1)))


def poly(text, ring):
    return parse_poly(text, ring)


def ideal(ring, *texts):
    return Ideal(ring, [parse_poly(t, ring) for t in texts])


@pytest.fixture(scope="session")
def mk_poly():
    return poly


@pytest.fixture(scope="session")
def mk_ideal():
    return ideal
