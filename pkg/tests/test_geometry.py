import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles as O
from strategies import centered_polygons, invertible_maps, polygons, small_points, symmetric_polygons, triangles
from unavoidable.errors import ConvexityError, DegenerateInput, OriginNotInterior
from unavoidable.geometry import (
    IDENTITY,
    LinearMap2,
    SimplexN,
    apply_linear,
    area,
    basic_simplex,
    contains,
    convex_hull,
    difference_body,
    dual_simplex,
    gauge,
    minkowski_sum,
    negate,
    polar_dual,
    polygon,
    scale,
    simplex_volume,
    support,
)


def as_set(P):
    return set(P.vertices)


# ---------------------------------------------------------------- examples


def test_hull_drops_interior_point():
    P = convex_hull([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])
    assert P.vertices == ((0, 0), (2, 0), (2, 2), (0, 2))


def test_hull_of_basic_triangle(basic_triangle):
    assert as_set(convex_hull([(1, 0), (0, 1), (-1, -1)])) == as_set(basic_triangle)


def test_hull_rejects_collinear():
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0), (1, 0), (2, 0)])


def test_constructor_names_reflex_vertex():
    with pytest.raises(ConvexityError, match=r"\(1, 1\)"):
        polygon([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])


@pytest.mark.parametrize(
    "pts, expected",
    [
        ([(1, 0), (0, 1), (-1, -1)], F(3, 2)),
        ([(1, 1), (-1, 1), (-1, -1), (1, -1)], 4),
        ([(F(3, 2), 0), (0, 1), (-1, -1)], 2),
    ],
)
def test_area_examples(pts, expected):
    P = polygon(pts)
    assert area(P) == expected
    assert O.area_by_strips(P) == expected


def test_gauge_examples(square, basic_triangle):
    assert gauge(square, (2, 0)) == 2
    assert gauge(square, (1, 1)) == 1
    assert gauge(basic_triangle, (-2, -2)) == 2


def test_support_examples(square, basic_triangle):
    assert support(square, (1, 0)) == 1
    assert support(basic_triangle, (1, 1)) == 1
    assert support(basic_triangle, (-1, 0)) == 1


def test_polar_examples(square, cross_polytope, basic_triangle, worked_triangle):
    assert polar_dual(square) == cross_polytope
    assert as_set(polar_dual(basic_triangle)) == {(1, 1), (-2, 1), (1, -2)}
    assert as_set(polar_dual(worked_triangle)) == {(F(2, 3), 1), (-2, 1), (F(2, 3), F(-5, 3))}


def test_polar_needs_interior_origin():
    with pytest.raises(OriginNotInterior):
        polar_dual(polygon([(0, 0), (1, 0), (0, 1)]))


def test_difference_body_examples(basic_triangle, square):
    D = difference_body(basic_triangle)
    assert D.n == 6 and area(D) == 9
    assert difference_body(square) == scale(square, 2)


def test_apply_linear_examples(basic_triangle, square):
    assert apply_linear(basic_triangle, IDENTITY) == basic_triangle
    assert apply_linear(basic_triangle, LinearMap2(0, 1, 1, 0)) == basic_triangle
    assert area(apply_linear(square, LinearMap2(2, 0, 0, 1))) == 8


def test_contains_examples(square, basic_triangle):
    assert not contains(square, (1, 0), "interior")
    assert contains(square, (1, 0), "closed")
    assert contains(basic_triangle, (0, 0), "interior")


def test_simplex_examples():
    assert simplex_volume(basic_simplex(2)) == F(3, 2)
    assert simplex_volume(basic_simplex(3)) == F(2, 3)
    assert basic_simplex(1).vertices == ((1,), (-1,))
    assert basic_simplex(3).vertices == ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))
    for n in range(1, 5):
        standard = SimplexN(n, tuple([(0,) * n] + [tuple(int(i == j) for j in range(n)) for i in range(n)]))
        assert simplex_volume(standard) == F(1, math.factorial(n))


def test_dual_simplex_examples():
    assert set(dual_simplex(basic_simplex(2)).vertices) == {(1, 1), (-2, 1), (1, -2)}
    assert set(dual_simplex(basic_simplex(3)).vertices) == {(1, 1, 1), (-3, 1, 1), (1, -3, 1), (1, 1, -3)}
    for n in (2, 3, 4):
        S = basic_simplex(n)
        assert set(dual_simplex(dual_simplex(S)).vertices) == set(S.vertices)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simplex_volume_matches_cofactors(n):
    S = basic_simplex(n)
    assert simplex_volume(S) == O.simplex_volume_by_cofactors(S.vertices)


# ---------------------------------------------------------------- properties


@given(centered_polygons())
def test_duality_is_an_involution(P):
    assume(P.has_origin_inside)
    assert polar_dual(polar_dual(P)) == P


@given(centered_polygons(), centered_polygons())
def test_duality_reverses_inclusion(A, B):
    assume(A.has_origin_inside and B.has_origin_inside)
    # A is inside the hull of A and B, so the dual of the hull is inside the dual of A
    H = convex_hull(A.vertices + B.vertices)
    assert all(contains(polar_dual(A), w) for w in polar_dual(H).vertices)


@given(centered_polygons(), invertible_maps())
def test_duality_is_equivariant(P, M):
    assume(P.has_origin_inside)
    left = polar_dual(apply_linear(P, M.inverse()))
    right = apply_linear(polar_dual(P), M.transpose())
    assert left == right


@given(centered_polygons(), st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_support_is_dual_gauge(P, w):
    assume(P.has_origin_inside)
    assert support(P, w) == gauge(polar_dual(P), w) or (w == (0, 0) and support(P, w) == 0)


@given(centered_polygons(), small_points, small_points)
def test_gauge_is_subadditive_and_homogeneous(P, u, v):
    assume(P.has_origin_inside)
    s = (u[0] + v[0], u[1] + v[1])
    assert gauge(P, s) <= gauge(P, u) + gauge(P, v)
    assert gauge(P, (3 * u[0], 3 * u[1])) == 3 * gauge(P, u)
    assert gauge(P, u) == O.gauge_by_rays(P, u)


@given(polygons(), invertible_maps())
def test_area_scales_by_determinant(P, M):
    assert area(apply_linear(P, M)) == abs(M.det) * area(P)


@given(polygons())
def test_area_matches_strip_oracle(P):
    assert area(P) == O.area_by_strips(P)


@given(polygons(), polygons())
def test_minkowski_sum_matches_hull_oracle(A, B):
    assert minkowski_sum(A, B) == polygon(O.minkowski_sum_by_hull(A, B))


@given(polygons())
def test_difference_body_sandwich(P):
    D = difference_body(P)
    assert D == negate(D)
    assert 4 * area(P) <= area(D) <= 6 * area(P)


@given(triangles())
def test_triangle_difference_body_ratio_six(P):
    assert area(difference_body(P)) == 6 * area(P)


@given(symmetric_polygons())
def test_symmetric_difference_body_ratio_four(P):
    assert area(difference_body(P)) == 4 * area(P)


@given(st.lists(small_points, min_size=3, max_size=12, unique=True))
def test_hull_matches_gift_wrapping(pts):
    try:
        H = convex_hull(pts)
    except DegenerateInput:
        return
    assert H == polygon(O.hull_of(pts))
