"""Integer-lattice computations on exact polygons.

Unavoidability is decided on the dual side: the line ``w . x = 1`` misses a
body ``K`` with the origin inside iff ``w`` lies in the interior of the polar
body, so ``K`` meets every integer line iff the polar has no nonzero interior
lattice point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DimensionTooLarge, NotSymmetric, OriginNotInterior
from .geometry import (
    ConvexPolygon,
    LinearMap2,
    Point,
    SimplexN,
    area,
    as_point,
    cross,
    dot,
    dual_simplex,
    frac,
    gauge,
    orient,
    polar_dual,
    support,
)


@dataclass(frozen=True, order=True)
class IntegerLine:
    """The line ``m*x + n*y = 1``; non-primitive covectors are legitimate lines."""

    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 and self.n == 0:
            raise ValueError("an integer line needs a nonzero covector")

    @property
    def covector(self) -> Point:
        return (Fraction(self.m), Fraction(self.n))

    def meets(self, P: ConvexPolygon) -> bool:
        values = [dot(self.covector, p) for p in P.vertices]
        return min(values) <= 1 <= max(values)

    def __str__(self):
        return f"{self.m}x + {self.n}y = 1"


@dataclass(frozen=True)
class Lattice2:
    b1: Point
    b2: Point

    def __post_init__(self):
        object.__setattr__(self, "b1", as_point(self.b1))
        object.__setattr__(self, "b2", as_point(self.b2))
        if self.det == 0:
            raise ValueError("lattice basis is degenerate")

    @property
    def det(self) -> Fraction:
        return abs(cross(self.b1, self.b2))

    @property
    def basis_map(self) -> LinearMap2:
        return LinearMap2.from_columns(self.b1, self.b2)

    def point(self, z) -> Point:
        return (z[0] * self.b1[0] + z[1] * self.b2[0], z[0] * self.b1[1] + z[1] * self.b2[1])

    def scaled(self, s) -> "Lattice2":
        s = frac(s)
        return Lattice2((s * self.b1[0], s * self.b1[1]), (s * self.b2[0], s * self.b2[1]))


Z2 = Lattice2((1, 0), (0, 1))


@dataclass(frozen=True)
class AvoidanceCertificate:
    unavoidable: bool
    witness: Optional[IntegerLine] = None
    dual_interior_points: tuple = ()

    @property
    def verdict(self) -> str:
        return "unavoidable" if self.unavoidable else "avoidable"


@dataclass(frozen=True)
class ReducedBasis2:
    transform: LinearMap2
    a1: Fraction
    a2: Fraction
    ball_area: Fraction = field(default=Fraction(0))

    @property
    def product(self) -> Fraction:
        return self.a1 * self.a2 * self.ball_area


def integer_box(P: ConvexPolygon):
    xs = [p[0] for p in P.vertices]
    ys = [p[1] for p in P.vertices]
    return (math.floor(min(xs)), math.ceil(max(xs))), (math.floor(min(ys)), math.ceil(max(ys)))


def lattice_points(P: ConvexPolygon, mode: str = "closed") -> list:
    """Integer points of ``P`` (``mode`` is ``"interior"`` or ``"closed"``), sorted."""
    (x0, x1), (y0, y1) = integer_box(P)
    edges = P.edges()
    strict = mode == "interior"
    if mode not in ("interior", "closed"):
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            p = (Fraction(x), Fraction(y))
            ok = True
            for a, b in edges:
                s = orient(a, b, p)
                if s < 0 or (strict and s == 0):
                    ok = False
                    break
            if ok:
                out.append((x, y))
    return out


def _nonzero_interior_points(P: ConvexPolygon) -> list:
    return [z for z in lattice_points(P, "interior") if z != (0, 0)]


def _shell(r: int):
    """Integer covectors of sup-norm exactly ``r``, in lexicographic order."""
    for m in range(-r, r + 1):
        for n in range(-r, r + 1):
            if max(abs(m), abs(n)) == r:
                yield (m, n)


def _scan_missed_line(P: ConvexPolygon):
    # Lines w.x = 1 with support(P, w) < 1 miss P.  When the origin is not
    # interior such covectors exist in every direction of a separating half
    # plane, so the scan terminates; the bound doubles as a safety valve.
    bound = 1
    r = 1
    while True:
        found = []
        while r <= bound:
            found.extend(w for w in _shell(r) if support(P, w) < 1)
            if found:
                return found
            r += 1
        bound *= 2
        if bound > 1 << 20:
            raise RuntimeError("missed-line scan did not terminate")


def is_unavoidable(P: ConvexPolygon) -> AvoidanceCertificate:
    if not P.has_origin_inside:
        found = _scan_missed_line(P)
        return AvoidanceCertificate(False, IntegerLine(*_deepest(P, found)), tuple(found))
    inside = _nonzero_interior_points(polar_dual(P))
    if not inside:
        return AvoidanceCertificate(True)
    return AvoidanceCertificate(False, IntegerLine(*_deepest(P, inside)), tuple(inside))


def _deepest(P: ConvexPolygon, covectors):
    # the most clearly missed line: least support, then least sup-norm, then
    # lexicographically largest so that the choice is canonical
    return min(covectors, key=lambda z: (support(P, z), max(abs(z[0]), abs(z[1])), (-z[0], -z[1])))


def missed_lines(P: ConvexPolygon) -> list:
    if not P.has_origin_inside:
        raise OriginNotInterior("missed_lines needs the origin in the interior")
    return [IntegerLine(*z) for z in _nonzero_interior_points(polar_dual(P))]


def segment_lattice_points(a: Point, b: Point) -> list:
    """Integer points on the closed segment ``[a, b]``, sorted."""
    lo_x, hi_x = sorted((a[0], b[0]))
    lo_y, hi_y = sorted((a[1], b[1]))
    d = (b[0] - a[0], b[1] - a[1])
    out = []
    for x in range(math.ceil(lo_x), math.floor(hi_x) + 1):
        for y in range(math.ceil(lo_y), math.floor(hi_y) + 1):
            if cross(d, (x - a[0], y - a[1])) == 0:
                out.append((x, y))
    return out


def vertex_weight(P: ConvexPolygon, i: int):
    """Number of integer lines supporting ``P`` at vertex ``i``, and the lines.

    They are the lattice points on the closed edge of the polar body dual to
    the vertex, i.e. between the covectors of the two incident edges.
    """
    w = P.edge_covectors
    n = len(w)
    pts = segment_lattice_points(w[(i - 1) % n], w[i % n])
    return len(pts), [IntegerLine(*z) for z in pts]


def minkowski_witness(P: ConvexPolygon):
    """A nonzero lattice point of the closed symmetric body, or ``None``."""
    if not P.is_symmetric:
        raise NotSymmetric("Minkowski's theorem needs a 0-symmetric body")
    for z in lattice_points(P, "closed"):
        if z != (0, 0):
            return z
    return None


def _preimage_box(ball: ConvexPolygon, L: Lattice2, radius: Fraction):
    """Integer box containing every ``z`` with ``gauge(ball, B z) <= radius``."""
    inv = L.basis_map.inverse()
    pts = [inv((radius * p[0], radius * p[1])) for p in ball.vertices]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return (math.floor(min(xs)), math.ceil(max(xs))), (math.floor(min(ys)), math.ceil(max(ys)))


def shortest_vector(ball: ConvexPolygon, L: Lattice2 = Z2):
    """Nonzero ``z`` minimizing the (possibly asymmetric) gauge of ``z1 b1 + z2 b2``.

    Ties are broken by the lexicographically least ``z``.
    """
    if not ball.has_origin_inside:
        raise OriginNotInterior("the ball must contain the origin in its interior")
    upper = min(gauge(ball, L.point(z)) for z in ((1, 0), (-1, 0), (0, 1), (0, -1)))
    (x0, x1), (y0, y1) = _preimage_box(ball, L, upper)
    best = None
    for z in itertools.product(range(x0, x1 + 1), range(y0, y1 + 1)):
        if z == (0, 0):
            continue
        g = gauge(ball, L.point(z))
        if g <= upper and (best is None or (g, z) < best):
            best = (g, z)
    return best[1], best[0]


def reduced_basis(ball: ConvexPolygon) -> ReducedBasis2:
    """Minkowski-reduced basis of Z^2 for the norm with unit ball ``ball``."""
    if not ball.is_symmetric:
        raise NotSymmetric("reduction needs a 0-symmetric ball")
    z1, a1 = shortest_vector(ball)
    # any completion of z1 to a unimodular basis bounds a2 from above
    g, s, t = _ext_gcd(z1[0], z1[1])
    completion = (-t, s)
    upper = gauge(ball, completion)
    (x0, x1), (y0, y1) = _preimage_box(ball, Z2, upper)
    best = None
    for z in itertools.product(range(x0, x1 + 1), range(y0, y1 + 1)):
        if abs(z1[0] * z[1] - z1[1] * z[0]) != 1:
            continue
        val = gauge(ball, z)
        if best is None or (val, z) < best:
            best = (val, z)
    a2, z2 = best
    if z1[0] * z2[1] - z1[1] * z2[0] < 0:
        z2 = (-z2[0], -z2[1])
    T = LinearMap2.from_columns(z1, z2)
    return ReducedBasis2(T, a1, a2, area(ball))


def _ext_gcd(a: int, b: int):
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b)``."""
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = _ext_gcd(b, a % b)
    return (g, t, s - (a // b) * t)


def unavoidable_simplex(S: SimplexN) -> bool:
    """True iff the dual simplex has no nonzero lattice point in its interior."""
    if S.dim > 4:
        raise DimensionTooLarge("enumeration is only supported up to dimension 4")
    D = dual_simplex(S)
    ranges = [
        range(math.floor(min(v[i] for v in D.vertices)), math.ceil(max(v[i] for v in D.vertices)) + 1)
        for i in range(S.dim)
    ]
    # interior of the polar of S is {xi : xi . v < 1 for all vertices v of S}
    for z in itertools.product(*ranges):
        if any(z):
            if all(sum(a * b for a, b in zip(z, v)) < 1 for v in S.vertices):
                return False
    return True


__all__ = [
    "AvoidanceCertificate",
    "IntegerLine",
    "Lattice2",
    "ReducedBasis2",
    "Z2",
    "integer_box",
    "is_unavoidable",
    "lattice_points",
    "minkowski_witness",
    "missed_lines",
    "reduced_basis",
    "segment_lattice_points",
    "shortest_vector",
    "unavoidable_simplex",
    "vertex_weight",
]
