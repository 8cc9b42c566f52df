"""Exact rational planar convex geometry.

Points and covectors are plain tuples of :class:`fractions.Fraction`; the
pairing ``w . p`` is :func:`dot`.  A :class:`ConvexPolygon` is immutable and
stored in canonical form (counterclockwise, starting at the lexicographically
smallest vertex), so two polygons are equal iff they are the same set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    ConvexityError,
    DegenerateFacet,
    DegenerateInput,
    OriginNotInterior,
    SingularMap,
)

Point = tuple  # (Fraction, Fraction); covectors use the same representation

ORIGIN = (Fraction(0), Fraction(0))


def frac(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def point(x, y) -> Point:
    return (frac(x), frac(y))


def as_point(p) -> Point:
    x, y = p
    return (frac(x), frac(y))


def dot(w: Point, p: Point) -> Fraction:
    return w[0] * p[0] + w[1] * p[1]


def cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def mul(s, a: Point) -> Point:
    return (s * a[0], s * a[1])


def neg(a: Point) -> Point:
    return (-a[0], -a[1])


def orient(a: Point, b: Point, c: Point) -> Fraction:
    """Twice the signed area of triangle abc (positive for a left turn)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def is_integer_point(p: Sequence[Fraction]) -> bool:
    return all(c.denominator == 1 for c in p)


def primitive_direction(v: Point) -> tuple[int, int]:
    """The primitive integer vector pointing along the rational vector ``v``."""
    if v[0] == 0 and v[1] == 0:
        raise ValueError("zero vector has no direction")
    lcm = math.lcm(v[0].denominator, v[1].denominator)
    a, b = int(v[0] * lcm), int(v[1] * lcm)
    g = math.gcd(a, b)
    return (a // g, b // g)


def _half(e: Point) -> int:
    return 0 if e[1] > 0 or (e[1] == 0 and e[0] > 0) else 1


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon with exact rational vertices.

    The constructor accepts any strictly convex counterclockwise vertex list
    and rotates it into canonical order.  Use :func:`convex_hull` for point
    clouds.
    """

    vertices: tuple

    def __post_init__(self):
        verts = [as_point(p) for p in self.vertices]
        n = len(verts)
        if n < 3:
            raise DegenerateInput(f"a polygon needs at least 3 vertices, got {n}")
        wraps = 0
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            if orient(a, b, c) <= 0:
                raise ConvexityError(
                    f"vertices {_fmt_point(a)}, {_fmt_point(b)}, {_fmt_point(c)} do not make a strict left turn "
                    f"(reflex or collinear vertex at index {i})",
                    index=i,
                )
            if _half(sub(b, a)) == 1 and _half(sub(c, b)) == 0:
                wraps += 1
        if wraps != 1:
            raise ConvexityError("vertex list winds around more than once")
        start = min(range(n), key=lambda i: verts[i])
        object.__setattr__(self, "vertices", tuple(verts[start:] + verts[:start]))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        body = ", ".join(f"({_fmt(x)}, {_fmt(y)})" for x, y in self.vertices)
        return f"ConvexPolygon([{body}])"

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self):
        """Pairs ``(x_i, x_{i+1})`` in counterclockwise order."""
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    @cached_property
    def edge_covectors(self) -> tuple:
        """Covector ``w_i`` with ``w_i . x = 1`` on the line of edge ``i``.

        Only defined when the origin is interior; these are the vertices of
        the polar body, listed counterclockwise.
        """
        if not contains(self, ORIGIN, "interior"):
            raise OriginNotInterior(f"{self!r} does not contain the origin in its interior")
        return tuple(_edge_covector(a, b) for a, b in self.edges())

    @cached_property
    def is_integer(self) -> bool:
        return all(is_integer_point(p) for p in self.vertices)

    @cached_property
    def is_symmetric(self) -> bool:
        return negate(self) == self

    @cached_property
    def has_origin_inside(self) -> bool:
        return contains(self, ORIGIN, "interior")


def _fmt(x: Fraction) -> str:
    return str(x)


def _fmt_point(p: Point) -> str:
    return f"({p[0]}, {p[1]})"


def _edge_covector(a: Point, b: Point) -> Point:
    d = cross(a, b)
    return ((b[1] - a[1]) / d, (a[0] - b[0]) / d)


def polygon(points: Iterable) -> ConvexPolygon:
    return ConvexPolygon(tuple(as_point(p) for p in points))


def convex_hull(points: Iterable) -> ConvexPolygon:
    """Minimal strictly convex polygon containing ``points`` (monotone chain)."""
    pts = sorted({as_point(p) for p in points})
    if len(pts) < 3:
        raise DegenerateInput("fewer than 3 distinct points")

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    return ConvexPolygon(tuple(hull))


def area(P: ConvexPolygon) -> Fraction:
    v = P.vertices
    return sum((cross(v[i], v[(i + 1) % len(v)]) for i in range(len(v))), Fraction(0)) / 2


def contains(P: ConvexPolygon, p, mode: str = "closed") -> bool:
    p = as_point(p)
    if mode == "interior":
        return all(orient(a, b, p) > 0 for a, b in P.edges())
    if mode == "closed":
        return all(orient(a, b, p) >= 0 for a, b in P.edges())
    raise ValueError(f"unknown containment mode {mode!r}")


def contains_polygon(outer: ConvexPolygon, inner: ConvexPolygon) -> bool:
    return all(contains(outer, p, "closed") for p in inner.vertices)


def support(P: ConvexPolygon, w) -> Fraction:
    w = as_point(w)
    return max(dot(w, p) for p in P.vertices)


def gauge(P: ConvexPolygon, v) -> Fraction:
    """Minkowski functional ``inf {t > 0 : v in tP}``; needs the origin interior."""
    v = as_point(v)
    return max(max(dot(w, v) for w in P.edge_covectors), Fraction(0))


def polar_dual(P: ConvexPolygon) -> ConvexPolygon:
    return ConvexPolygon(P.edge_covectors)


def scale(P: ConvexPolygon, s) -> ConvexPolygon:
    s = frac(s)
    if s <= 0:
        raise ValueError("scale factor must be positive")
    return ConvexPolygon(tuple(mul(s, p) for p in P.vertices))


def negate(P: ConvexPolygon) -> ConvexPolygon:
    return ConvexPolygon(tuple(neg(p) for p in P.vertices))


def translate(P: ConvexPolygon, d) -> ConvexPolygon:
    d = as_point(d)
    return ConvexPolygon(tuple(add(p, d) for p in P.vertices))


def _angle_key_less(e: Point, f: Point) -> bool:
    he, hf = _half(e), _half(f)
    if he != hf:
        return he < hf
    return cross(e, f) > 0


def minkowski_sum(A: ConvexPolygon, B: ConvexPolygon) -> ConvexPolygon:
    """Minkowski sum by merging the two edge sequences in angular order."""

    def rooted(P):
        v = list(P.vertices)
        i = min(range(len(v)), key=lambda k: (v[k][1], v[k][0]))
        v = v[i:] + v[:i]
        return v[0], [sub(v[(k + 1) % len(v)], v[k]) for k in range(len(v))]

    a0, ea = rooted(A)
    b0, eb = rooted(B)
    # Rooted at the lowest-then-leftmost vertex, both edge lists already run in
    # increasing angle from direction (1, 0) inclusive.
    merged = []
    i = j = 0
    while i < len(ea) or j < len(eb):
        if j == len(eb) or (i < len(ea) and _angle_key_less(ea[i], eb[j])):
            e = ea[i]
            i += 1
        elif i == len(ea) or _angle_key_less(eb[j], ea[i]):
            e = eb[j]
            j += 1
        else:
            e = add(ea[i], eb[j])
            i += 1
            j += 1
        if merged and cross(merged[-1], e) == 0 and dot(merged[-1], e) > 0:
            merged[-1] = add(merged[-1], e)
        else:
            merged.append(e)
    verts = [add(a0, b0)]
    for e in merged[:-1]:
        verts.append(add(verts[-1], e))
    return ConvexPolygon(tuple(verts))


def difference_body(P: ConvexPolygon) -> ConvexPolygon:
    """``P - P``, the Minkowski sum of ``P`` and ``-P``."""
    return minkowski_sum(P, negate(P))


@dataclass(frozen=True)
class LinearMap2:
    """The matrix ``[[a, b], [c, d]]`` acting on column vectors."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, frac(getattr(self, name)))
        if self.det == 0:
            raise SingularMap("matrix is singular")

    @classmethod
    def from_rows(cls, rows) -> "LinearMap2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def from_columns(cls, u, v) -> "LinearMap2":
        return cls(u[0], v[0], u[1], v[1])

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def is_unimodular(self) -> bool:
        return all(x.denominator == 1 for x in (self.a, self.b, self.c, self.d)) and abs(self.det) == 1

    def __call__(self, p) -> Point:
        x, y = as_point(p)
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __matmul__(self, other: "LinearMap2") -> "LinearMap2":
        return LinearMap2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "LinearMap2":
        k = self.det
        return LinearMap2(self.d / k, -self.b / k, -self.c / k, self.a / k)

    def transpose(self) -> "LinearMap2":
        return LinearMap2(self.a, self.c, self.b, self.d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))


IDENTITY = LinearMap2(1, 0, 0, 1)


def apply_linear(P: ConvexPolygon, M: LinearMap2) -> ConvexPolygon:
    image = [M(p) for p in P.vertices]
    if M.det < 0:
        image.reverse()
    return ConvexPolygon(tuple(image))


# ---------------------------------------------------------------------------
# n-dimensional simplices


def det(matrix) -> Fraction:
    """Exact determinant by fraction-preserving Gaussian elimination."""
    m = [[frac(x) for x in row] for row in matrix]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return sign * result


def solve(matrix, rhs) -> list:
    """Solve ``matrix @ x = rhs`` exactly; raises ``ZeroDivisionError`` if singular."""
    n = len(matrix)
    m = [[frac(x) for x in row] + [frac(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


@dataclass(frozen=True)
class SimplexN:
    dim: int
    vertices: tuple

    def __post_init__(self):
        verts = tuple(tuple(frac(c) for c in v) for v in self.vertices)
        if self.dim < 1:
            raise DegenerateInput("dimension must be positive")
        if len(verts) != self.dim + 1 or any(len(v) != self.dim for v in verts):
            raise DegenerateInput(f"a {self.dim}-simplex needs {self.dim + 1} points in R^{self.dim}")
        object.__setattr__(self, "vertices", verts)
        if self.edge_determinant() == 0:
            raise DegenerateInput("simplex vertices are affinely dependent")

    def edge_determinant(self) -> Fraction:
        v0 = self.vertices[0]
        return det([[x - y for x, y in zip(v, v0)] for v in self.vertices[1:]])

    def barycentric(self, p) -> list:
        """Barycentric coordinates of ``p`` with respect to the vertices."""
        n = self.dim
        rows = [[self.vertices[j][i] for j in range(n + 1)] for i in range(n)]
        rows.append([Fraction(1)] * (n + 1))
        return solve(rows, [frac(c) for c in p] + [Fraction(1)])

    def contains_origin(self) -> bool:
        return all(c > 0 for c in self.barycentric([0] * self.dim))

    def scaled(self, s) -> "SimplexN":
        s = frac(s)
        return SimplexN(self.dim, tuple(tuple(s * c for c in v) for v in self.vertices))


def simplex_volume(S: SimplexN) -> Fraction:
    return abs(S.edge_determinant()) / math.factorial(S.dim)


def basic_simplex(n: int) -> SimplexN:
    if n < 1:
        raise ValueError("n must be at least 1")
    verts = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    verts.append(tuple(Fraction(-1) for _ in range(n)))
    return SimplexN(n, tuple(verts))


def dual_simplex(S: SimplexN) -> SimplexN:
    """Polar simplex; vertex ``j`` is the covector of the facet opposite vertex ``j``."""
    if not S.contains_origin():
        raise OriginNotInterior("origin is not interior to the simplex")
    n = S.dim
    out = []
    for j in range(n + 1):
        facet = [v for i, v in enumerate(S.vertices) if i != j]
        try:
            out.append(tuple(solve(facet, [1] * n)))
        except ZeroDivisionError:
            raise DegenerateFacet(f"facet opposite vertex {j} passes through the origin") from None
    return SimplexN(n, tuple(out))
