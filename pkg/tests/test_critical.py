import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from unavoidable.bodies import disc_polygon
from unavoidable.critical import critical_lattice_symmetric, exact_admissible
from unavoidable.errors import NotSymmetric
from unavoidable.geometry import area, difference_body, polygon, scale
from unavoidable.lattice import Lattice2, shortest_vector

HEXAGON = polygon([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)])


@pytest.fixture(scope="module")
def disc():
    return disc_polygon()


@pytest.fixture(scope="module")
def disc_critical(disc):
    return critical_lattice_symmetric(disc, 1e-6)


def test_square(square):
    L, delta = critical_lattice_symmetric(square)
    assert abs(delta - 1) <= 1e-6
    assert exact_admissible(square, L)
    assert O.admissible_by_box(square, L.b1, L.b2)


def test_cross_polytope(cross_polytope):
    L, delta = critical_lattice_symmetric(cross_polytope)
    assert abs(delta - 0.5) <= 1e-6
    assert exact_admissible(cross_polytope, L)


def test_hexagons(basic_triangle):
    L, delta = critical_lattice_symmetric(HEXAGON)
    assert abs(delta - 0.75) <= 1e-6
    assert exact_admissible(HEXAGON, L)
    D = difference_body(basic_triangle)
    L, delta = critical_lattice_symmetric(D)
    assert abs(delta - 2.25) <= 1e-6
    assert exact_admissible(D, L)


@pytest.mark.parametrize("body", ["square", "cross_polytope", "hexagon"])
def test_minkowski_lower_bound_is_tight_for_these(body, request):
    K = HEXAGON if body == "hexagon" else request.getfixturevalue(body)
    _, delta = critical_lattice_symmetric(K)
    # Minkowski: |K| <= 4 Delta(K); equality for bodies tiling by a lattice
    assert abs(delta - float(area(K)) / 4) <= 1e-6


def test_disc_value(disc, disc_critical):
    L, delta = disc_critical
    assert abs(delta - math.sqrt(3) / 2) <= 1e-3
    assert exact_admissible(disc, L)
    # circumscribed polygon: Delta(disc) <= Delta(K) <= sec^2(pi/96) Delta(disc)
    assert math.sqrt(3) / 2 - 1e-6 <= delta <= math.sqrt(3) / 2 / math.cos(math.pi / 96) ** 2 + 1e-6


def test_disc_basis_is_near_hexagonal(disc_critical):
    L, delta = disc_critical
    # a critical lattice of the disc has three shortest vectors of length ~1
    # at 60 degree angles
    u, v = L.b1, L.b2
    lengths = sorted(math.hypot(float(p[0]), float(p[1])) for p in (u, v, (u[0] - v[0], u[1] - v[1]),
                                                                     (u[0] + v[0], u[1] + v[1])))
    assert all(abs(x - 1) <= 2e-2 for x in lengths[:3])


def test_not_symmetric(basic_triangle):
    with pytest.raises(NotSymmetric):
        critical_lattice_symmetric(basic_triangle)


def test_exact_admissible_detects_interior_points(square):
    assert not exact_admissible(square, Lattice2((F(1, 2), 0), (0, 1)))
    assert exact_admissible(square, Lattice2((1, 0), (F(1, 2), 1)))


@settings(max_examples=25)
@given(
    st.sampled_from(["square", "hexagon", "difference"]),
    st.tuples(*[st.builds(F, st.integers(-9, 9), st.integers(1, 5)) for _ in range(4)]),
)
def test_no_admissible_lattice_beats_the_critical_one(name, entries):
    K = {
        "square": polygon([(1, 1), (-1, 1), (-1, -1), (1, -1)]),
        "hexagon": HEXAGON,
        "difference": difference_body(polygon([(1, 0), (0, 1), (-1, -1)])),
    }[name]
    a, b, c, d = entries
    if a * d - b * c == 0:
        return
    L = Lattice2((a, c), (b, d))
    # rescale any lattice until it is admissible
    L = L.scaled(1 / shortest_vector(K, L)[1])
    assert exact_admissible(K, L)
    _, delta = critical_lattice_symmetric(K)
    assert float(L.det) >= delta - 1e-6


def test_scaling_law(square):
    _, d1 = critical_lattice_symmetric(square)
    _, d3 = critical_lattice_symmetric(scale(square, 3))
    assert abs(d3 - 9 * d1) <= 1e-5
