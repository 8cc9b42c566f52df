from fractions import Fraction as F

import pytest
from hypothesis import assume, given

import oracles as O
from strategies import centered_polygons, seeded, symmetric_polygons
from unavoidable.errors import NotReversible, OriginNotInterior, UnsupportedLattice
from unavoidable.geometry import area, polar_dual, polygon, scale
from unavoidable.lattice import Lattice2, Z2
from unavoidable.torus import FlatTorusMetric, bh_area, ht_area, systole, systolic_check, zoll_check

TRIANGLE_BALL = polygon([(1, 1), (-2, 1), (1, -2)])


def test_triangle_ball_is_extremal():
    M = FlatTorusMetric(TRIANGLE_BALL)
    assert not M.reversible
    assert systole(M) == 1
    assert ht_area(M) == F(3, 2)
    r = systolic_check(M)
    assert r.defect_general.lhs == 3 and r.defect_general.rhs == 3
    assert r.defect_general.equality and r.passed
    assert r.defect_reversible is None and r.bh_area_over_pi is None
    assert r.zoll


def test_square_ball_is_extremal(square):
    M = FlatTorusMetric(square)
    assert M.reversible
    r = systolic_check(M)
    assert r.systole == 1 and r.ht_area_times_pi == 2
    assert r.defect_reversible.lhs == 2 and r.defect_reversible.rhs == 2
    assert r.defect_reversible.equality
    assert r.bh_area_over_pi == F(1, 4)
    assert r.zoll


def test_scaled_square(square):
    M = FlatTorusMetric(scale(square, 2))
    r = systolic_check(M)
    assert r.systole == F(1, 2) and r.bh_area_over_pi == F(1, 16)
    assert not r.zoll
    # the inequality is scale invariant, so every square is extremal
    assert r.defect_reversible.equality


def test_errors(basic_triangle, square):
    with pytest.raises(OriginNotInterior):
        FlatTorusMetric(polygon([(1, 0), (2, 0), (2, 1)]))
    with pytest.raises(NotReversible):
        bh_area(FlatTorusMetric(basic_triangle))
    with pytest.raises(UnsupportedLattice):
        zoll_check(FlatTorusMetric(square, Lattice2((1, 0), (F(1, 2), 1))))


def test_general_lattice(square):
    L = Lattice2((2, 0), (1, 3))
    M = FlatTorusMetric(square, L)
    assert systole(M) == O.shortest_by_box(square, L.b1, L.b2)
    assert ht_area(M) == 2 * 6
    r = systolic_check(M)
    assert r.zoll is None and r.passed


def test_unimodular_lattices_count_as_z2(square):
    assert zoll_check(FlatTorusMetric(square, Lattice2((1, 1), (0, 1))))


def test_areas_scale(square):
    M = FlatTorusMetric(square, Z2.scaled(3))
    assert ht_area(M) == 9 * ht_area(FlatTorusMetric(square))
    assert bh_area(M) == 9 * bh_area(FlatTorusMetric(square))


@given(centered_polygons())
def test_general_inequality(P):
    assume(P.has_origin_inside)
    r = systolic_check(FlatTorusMetric(P))
    assert r.defect_general.holds
    assert r.ht_area_times_pi == area(polar_dual(P))


@given(symmetric_polygons())
def test_reversible_inequality(P):
    r = systolic_check(FlatTorusMetric(P))
    assert r.defect_general.holds and r.defect_reversible.holds
    # Busemann-Hausdorff and Holmes-Thompson agree up to the Mahler product
    assert r.bh_area_over_pi * area(P) == 1


@given(seeded("origin-interior", max_vertices=8, max_denominator=16))
def test_systolic_scale_invariance(P):
    a = systolic_check(FlatTorusMetric(P))
    b = systolic_check(FlatTorusMetric(scale(P, 3)))
    assert a.defect_general.lhs * b.defect_general.rhs == b.defect_general.lhs * a.defect_general.rhs


@given(seeded("origin-interior", max_vertices=8, max_denominator=16))
def test_zoll_implies_integer_primitive_vertices(P):
    if zoll_check(FlatTorusMetric(P)):
        assert P.is_integer
