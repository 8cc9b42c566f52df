"""Body files, seeded random bodies and rational disc approximations.

A body file is JSON::

    {"dim": 2, "vertices": [["3/2", "0"], ["0", "1"], ["-1", "-1"]],
     "lattice": [["1", "0"], ["0", "1"]], "meta": {}}

Every scalar is a string holding an exact rational; ``lattice`` and ``meta``
are optional.  Planar bodies become :class:`ConvexPolygon`, higher-dimensional
ones :class:`SimplexN`.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .errors import ConstraintUnsatisfiable, DegenerateInput, ParseError
from .geometry import (
    ConvexPolygon,
    SimplexN,
    convex_hull,
    cross,
    polar_dual,
)
from .lattice import Lattice2, is_unavoidable, shortest_vector

Body = Union[ConvexPolygon, SimplexN]

CONSTRAINTS = ("none", "origin-interior", "symmetric", "unavoidable", "symmetric-unavoidable")


@dataclass(frozen=True)
class BodyFile:
    body: Body
    lattice: Optional[Lattice2] = None
    meta: dict = field(default_factory=dict)


def _scalar(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError("scalars must be exact: write them as strings like \"3/2\"", field=where)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"expected a rational string, got {type(value).__name__}", field=where)
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {value!r}", field=where) from None


def _vector(raw, dim: int, where: str) -> tuple:
    if not isinstance(raw, list) or len(raw) != dim:
        raise ParseError(f"expected a list of {dim} scalars", field=where)
    return tuple(_scalar(x, f"{where}[{j}]") for j, x in enumerate(raw))


def _oriented_polygon(points: list) -> ConvexPolygon:
    # accept either orientation; the constructor checks strict convexity
    n = len(points)
    signed = sum(cross(points[i], points[(i + 1) % n]) for i in range(n))
    if signed < 0:
        points = points[::-1]
    return ConvexPolygon(tuple(points))


def parse_body_file(text: str) -> BodyFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    for key in ("dim", "vertices"):
        if key not in data:
            raise ParseError("missing required field", field=key)
    dim = data["dim"]
    if isinstance(dim, str) and dim.isdigit():
        dim = int(dim)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 2:
        raise ParseError("dim must be an integer >= 2", field="dim")
    raw = data["vertices"]
    if not isinstance(raw, list):
        raise ParseError("vertices must be a list", field="vertices")
    points = [_vector(v, dim, f"vertices[{i}]") for i, v in enumerate(raw)]

    if dim == 2:
        if len(points) < 3:
            raise DegenerateInput(f"a polygon needs at least 3 vertices, got {len(points)}")
        body: Body = _oriented_polygon(points)
    else:
        body = SimplexN(dim, tuple(points))

    lattice = None
    if data.get("lattice") is not None:
        if dim != 2:
            raise ParseError("lattices are only supported in the plane", field="lattice")
        rows = data["lattice"]
        if not isinstance(rows, list) or len(rows) != 2:
            raise ParseError("lattice must be two basis vectors", field="lattice")
        try:
            lattice = Lattice2(_vector(rows[0], 2, "lattice[0]"), _vector(rows[1], 2, "lattice[1]"))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), field="lattice") from None
    meta = data.get("meta") or {}
    if not isinstance(meta, dict):
        raise ParseError("meta must be an object", field="meta")
    return BodyFile(body, lattice, meta)


def parse_body(text: str) -> Body:
    return parse_body_file(text).body


def serialize_body(body: Body, lattice: Optional[Lattice2] = None, meta: Optional[dict] = None) -> str:
    if isinstance(body, ConvexPolygon):
        dim, verts = 2, body.vertices
    else:
        dim, verts = body.dim, body.vertices
    data = {"dim": dim, "vertices": [[str(x) for x in v] for v in verts]}
    if lattice is not None:
        data["lattice"] = [[str(x) for x in lattice.b1], [str(x) for x in lattice.b2]]
    if meta:
        data["meta"] = meta
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def serialize_body_file(bf: BodyFile) -> str:
    return serialize_body(bf.body, bf.lattice, bf.meta)


@dataclass(frozen=True)
class RandomBodySpec:
    seed: int
    min_vertices: int = 3
    max_vertices: int = 12
    max_denominator: int = 64
    constraint: str = "none"
    max_tries: int = 100

    def __post_init__(self):
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}; expected one of {CONSTRAINTS}")
        if not 3 <= self.min_vertices <= self.max_vertices:
            raise ValueError("vertex range must satisfy 3 <= min <= max")
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be positive")


def _round_to(x: Fraction, q: int) -> Fraction:
    return Fraction(round(x * q), q)


def _circle_point(rng: random.Random, q: int):
    """A rational point of the unit circle from the parametrization by slopes."""
    t = Fraction(rng.randint(-q, q), q)
    x, y = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    return (x if rng.random() < 0.5 else -x, y)


def _cloud(rng: random.Random, k: int, q: int, radius: int, symmetric: bool):
    count = (k + 1) // 2 if symmetric else k
    pts = []
    for _ in range(count):
        cx, cy = _circle_point(rng, q)
        r = radius * Fraction(rng.randint(q // 2 + 1, q), q)
        pts.append((_round_to(r * cx, q), _round_to(r * cy, q)))
    if symmetric:
        pts += [(-x, -y) for x, y in pts]
    return pts


def _make_unavoidable(P: ConvexPolygon, q: int) -> Optional[ConvexPolygon]:
    """Smallest dilate of ``P`` that meets every integer line, pushed onto the 1/q grid.

    The least admissible factor is exact: ``(lam P)*`` has no nonzero interior
    lattice point iff ``lam`` times the least gauge of ``P*`` on nonzero lattice
    points is at least 1.  Rounding can only shrink the body slightly, so the
    rounded dilate is enlarged in small steps until it is certified.
    """
    _, g = shortest_vector(polar_dual(P))
    lam = 1 / g
    for j in range(4 * q + 1):
        mu = lam * (1 + Fraction(j, 4 * q))
        pts = [(_round_to(mu * x, q), _round_to(mu * y, q)) for x, y in P.vertices]
        try:
            Q = convex_hull(pts)
        except DegenerateInput:
            continue
        if Q.has_origin_inside and is_unavoidable(Q).unavoidable:
            return Q
    return None


def random_body(spec: RandomBodySpec) -> ConvexPolygon:
    """Deterministic random polygon satisfying ``spec.constraint``."""
    rng = random.Random(spec.seed)
    symmetric = spec.constraint in ("symmetric", "symmetric-unavoidable")
    for _ in range(spec.max_tries):
        k = rng.randint(spec.min_vertices, spec.max_vertices)
        q = rng.randint(max(1, spec.max_denominator // 2), spec.max_denominator)
        radius = rng.randint(1, 3)
        pts = _cloud(rng, k, q, radius, symmetric)
        if spec.constraint == "none":
            shift = (Fraction(rng.randint(-q, q), q), Fraction(rng.randint(-q, q), q))
            pts = [(x + shift[0], y + shift[1]) for x, y in pts]
        try:
            P = convex_hull(pts)
        except DegenerateInput:
            continue
        if spec.constraint != "none" and not P.has_origin_inside:
            continue
        if spec.constraint.endswith("unavoidable"):
            P = _make_unavoidable(P, q)
            if P is None:
                continue
        if spec.min_vertices <= P.n <= spec.max_vertices:
            return P
    raise ConstraintUnsatisfiable(f"no body satisfying {spec} after {spec.max_tries} tries")


def random_bodies(count: int, seed: int, **kwargs) -> list:
    """``count`` bodies from consecutive seeds derived from ``seed``."""
    return [random_body(RandomBodySpec(seed=seed * 1_000_003 + i, **kwargs)) for i in range(count)]


def disc_polygon(n: int = 96, precision: int = 10**6) -> ConvexPolygon:
    """Rational polygon circumscribed about the unit disc, close to a regular ``n``-gon.

    Tangent points are rational points of the unit circle near the angles
    ``2 pi k / n``; the polygon is the polar of their hull, so each edge
    touches the circle.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be an even integer >= 4")
    tangents = []
    for k in range(n // 2):
        theta = 2 * math.pi * k / n - math.pi / 2
        # the slope parametrization covers the half circle x > 0 as t runs over (-1, 1)
        t = Fraction(math.tan(theta / 2)).limit_denominator(precision)
        tangents.append(((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)))
    tangents += [(-x, -y) for x, y in tangents]
    return polar_dual(convex_hull(tangents))


__all__ = [
    "BodyFile",
    "CONSTRAINTS",
    "RandomBodySpec",
    "disc_polygon",
    "parse_body",
    "parse_body_file",
    "random_bodies",
    "random_body",
    "serialize_body",
    "serialize_body_file",
]
