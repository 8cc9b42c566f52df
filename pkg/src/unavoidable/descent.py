"""Vertex-sliding descent from an unavoidable polygon to an integer polygon.

A step picks a non-integer vertex ``x0`` and a direction ``v`` along a line
supporting the polygon at ``x0`` (the unique integer line there if the vertex
has weight 1, an adjacent edge otherwise), oriented so that the area does not
grow, and slides ``x0`` to ``x0 + T v``.  ``T`` is the first time at which
either a new integer line touches the moving vertex or the moving vertex
merges with a neighbour.  Every quantity is an exact rational.

Polygon types ``(n, m, k)`` (vertices, non-integer vertices, max weight of a
non-integer vertex) strictly decrease in the lexicographic order on
``(n, m, -k)``, which bounds the number of steps.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import EnumerationFailed, NotUnavoidable, StepBudgetExceeded
from .geometry import (
    ORIGIN,
    ConvexPolygon,
    area,
    convex_hull,
    cross,
    dot,
    is_integer_point,
    orient,
    primitive_direction,
    sub,
)
from .lattice import IntegerLine, is_unavoidable, lattice_points, vertex_weight

_MAX_HORIZONS = 200


@functools.total_ordering
@dataclass(frozen=True)
class BodyType:
    n: int
    m: int
    k: int

    @property
    def key(self):
        return (self.n, self.m, -self.k)

    def __lt__(self, other: "BodyType"):
        return self.key < other.key

    def __str__(self):
        return f"({self.n}, {self.m}, {self.k})"


@dataclass(frozen=True)
class VirtualDeformation:
    vertex_index: int
    vertex: tuple
    direction: tuple  # primitive integer vector
    slope: Fraction  # d(area)/dt along the direction, never positive
    kind: str  # "weight0" or "weight1"
    line: Optional[IntegerLine] = None  # the supporting integer line for weight1


@dataclass(frozen=True)
class DeformationStep:
    start: ConvexPolygon
    vd: VirtualDeformation
    tau_plus: Optional[Fraction]  # None stands for +infinity
    t_origin: Optional[Fraction]
    T: Fraction
    event: str  # "vertex_merge" or "weight_increase"
    event_lines: tuple
    end: ConvexPolygon

    @property
    def start_area(self) -> Fraction:
        return area(self.start)

    @property
    def end_area(self) -> Fraction:
        return area(self.end)


@dataclass(frozen=True)
class DescentCertificate:
    start: ConvexPolygon
    steps: tuple
    terminal: ConvexPolygon
    terminal_area: Fraction
    is_minimal: bool
    strategy_log: tuple = field(default=())

    @property
    def areas(self):
        return [area(self.start)] + [s.end_area for s in self.steps]

    @property
    def types(self):
        return [body_type(self.start)] + [body_type(s.end) for s in self.steps]


def _require_unavoidable(P: ConvexPolygon):
    if not is_unavoidable(P).unavoidable:
        raise NotUnavoidable(f"{P!r} misses some integer line")


def _type_unchecked(P: ConvexPolygon) -> BodyType:
    weights = [vertex_weight(P, i)[0] for i, x in enumerate(P.vertices) if not is_integer_point(x)]
    k = max(weights, default=0)
    if k > 1:
        # two integer lines through a non-integer vertex cannot both support an
        # unavoidable polygon
        raise NotUnavoidable("non-integer vertex with weight above 1")
    return BodyType(P.n, len(weights), k)


def body_type(P: ConvexPolygon) -> BodyType:
    _require_unavoidable(P)
    return _type_unchecked(P)


def _neighbours(P: ConvexPolygon, i: int):
    v = P.vertices
    n = len(v)
    return v[(i - 1) % n], v[i], v[(i + 1) % n]


def area_slope(P: ConvexPolygon, i: int, d) -> Fraction:
    """Derivative of the area as vertex ``i`` slides along ``d``."""
    prev, _, nxt = _neighbours(P, i)
    d = (Fraction(d[0]), Fraction(d[1]))
    return -cross(sub(nxt, prev), d) / 2


def _moving(x0, d, t):
    return (x0[0] + t * d[0], x0[1] + t * d[1])


def _least_positive_root(f0: Fraction, f1: Fraction) -> Optional[Fraction]:
    """Least ``t > 0`` with ``f0 + t (f1 - f0) = 0`` given ``f0 > 0``."""
    rate = f1 - f0
    if rate >= 0:
        return None
    return -f0 / rate


def _min_time(times):
    times = [t for t in times if t is not None]
    return min(times) if times else None


def tau_plus(P: ConvexPolygon, i: int, d) -> Optional[Fraction]:
    """First time the moving vertex stops being in strictly convex position."""
    v = P.vertices
    n = len(v)
    x0 = v[i]
    prev, nxt = v[(i - 1) % n], v[(i + 1) % n]
    prev2, nxt2 = v[(i - 2) % n], v[(i + 2) % n]
    conditions = [
        lambda x: orient(prev, x, nxt),
        lambda x: orient(x, nxt, nxt2),
        lambda x: orient(prev2, prev, x),
    ]
    x1 = _moving(x0, d, 1)
    return _min_time(_least_positive_root(f(x0), f(x1)) for f in conditions)


def _origin_on_segment(a, b) -> bool:
    if a == b:
        return False
    return dot(sub(ORIGIN, a), sub(b, a)) >= 0 and dot(sub(ORIGIN, b), sub(a, b)) >= 0


def t_origin(P: ConvexPolygon, i: int, d) -> Optional[Fraction]:
    """First time the origin lies on one of the two moving edges.

    The collinearity condition alone also fires when the moving edge has
    shrunk to a point on the ray through the origin, so each root is checked
    against the segment itself.
    """
    prev, x0, nxt = _neighbours(P, i)
    x1 = _moving(x0, d, 1)
    times = []
    for other in (prev, nxt):
        f = lambda x: orient(other, x, ORIGIN)  # noqa: E731
        t = _least_positive_root(f(x0), f(x1)) if f(x0) > 0 else _least_positive_root(-f(x0), -f(x1))
        if t is not None and _origin_on_segment(_moving(x0, d, t), other):
            times.append(t)
    return _min_time(times)


def virtual_deformations(P: ConvexPolygon) -> list:
    _require_unavoidable(P)
    return _virtual_deformations(P)


def _virtual_deformations(P: ConvexPolygon) -> list:
    out = []
    v = P.vertices
    n = len(v)
    for i, x in enumerate(v):
        if is_integer_point(x):
            continue
        weight, lines = vertex_weight(P, i)
        if weight == 1:
            w = lines[0].covector
            d = primitive_direction((-w[1], w[0]))
            s = area_slope(P, i, d)
            if s > 0 or (s == 0 and tau_plus(P, i, d) is None and tau_plus(P, i, (-d[0], -d[1])) is not None):
                d = (-d[0], -d[1])
                s = -s
            out.append(VirtualDeformation(i, x, d, s, "weight1", lines[0]))
        elif weight == 0:
            # both adjacent edges support P; prefer a strictly negative slope,
            # then the counterclockwise (forward) edge
            options = []
            for rank, j in enumerate(((i + 1) % n, (i - 1) % n)):
                d = primitive_direction(sub(v[j], x))
                s = area_slope(P, i, d)
                if s <= 0:
                    options.append((0 if s < 0 else 1, rank, d, s))
            _, _, d, s = min(options)
            out.append(VirtualDeformation(i, x, d, s, "weight0"))
        else:
            raise NotUnavoidable("non-integer vertex with weight above 1")
    return out


def _events_up_to(P: ConvexPolygon, i: int, d, horizon: Fraction):
    """Event covectors with event time in ``(0, horizon]``; returns (time, lines)."""
    x0 = P.vertices[i]
    fixed = [p for j, p in enumerate(P.vertices) if j != i]
    later = convex_hull(fixed + [_moving(x0, d, horizon)])
    # Points of P_0 and P_horizon stay in every intermediate P_s, so each
    # event line supports their intersection; the polar of an intersection is
    # the hull of the polars.
    search = convex_hull(list(P.edge_covectors) + list(later.edge_covectors))
    dq = (Fraction(d[0]), Fraction(d[1]))
    best = None
    hits = []
    for z in lattice_points(search, "closed"):
        if z == (0, 0):
            continue
        w = (Fraction(z[0]), Fraction(z[1]))
        wv = dot(w, dq)
        wx = dot(w, x0)
        if wv == 0 or wx == 1:
            continue
        t = (1 - wx) / wv
        if t <= 0 or t > horizon:
            continue
        if any(dot(w, p) > 1 for p in fixed):
            continue
        if best is None or t < best:
            best, hits = t, [IntegerLine(*z)]
        elif t == best:
            hits.append(IntegerLine(*z))
    return best, hits


def deformation_step(P: ConvexPolygon, vd: VirtualDeformation) -> DeformationStep:
    _require_unavoidable(P)
    return _step(P, vd)


def _step(P: ConvexPolygon, vd: VirtualDeformation) -> DeformationStep:
    i, d = vd.vertex_index, vd.direction
    if P.vertices[i] != vd.vertex:
        raise ValueError("virtual deformation does not belong to this polygon")
    tp = tau_plus(P, i, d)
    to = t_origin(P, i, d)
    if tp is None and to is None:
        raise EnumerationFailed("both the merge time and the origin time are infinite")

    if tp is not None and (to is None or tp < to):
        horizons = []
        h = tp / 4
        while h < tp and len(horizons) < _MAX_HORIZONS:
            horizons.append(h)
            h *= 2
        horizons.append(tp)
    else:
        horizons = []
        gap = to / 2
        for _ in range(_MAX_HORIZONS):
            horizons.append(to - gap)
            gap /= 2

    T = None
    hits = []
    for h in horizons:
        T, hits = _events_up_to(P, i, d, h)
        if T is not None:
            break
    if T is None:
        if tp is not None and (to is None or tp < to):
            T, event = tp, "vertex_merge"
        else:
            raise EnumerationFailed("no event found before the origin reaches the boundary")
    else:
        event = "weight_increase"

    fixed = [p for j, p in enumerate(P.vertices) if j != i]
    end = convex_hull(fixed + [_moving(P.vertices[i], d, T)])
    step = DeformationStep(P, vd, tp, to, T, event, tuple(hits), end)
    if area(end) > area(P):
        raise EnumerationFailed("area increased along a deformation")
    return step


def _choose(vds):
    # weight-1 vertices first, then the lexicographically smallest vertex
    return min(vds, key=lambda vd: (vd.kind != "weight1", vd.vertex))


def _describe(vd: VirtualDeformation, step: DeformationStep) -> str:
    x = ", ".join(str(c) for c in vd.vertex)
    return (
        f"slide ({x}) [{vd.kind}] along {vd.direction}: T = {step.T} "
        f"({step.event}), area {step.start_area} -> {step.end_area}"
    )


def default_budget(P: ConvexPolygon) -> int:
    m = sum(1 for x in P.vertices if not is_integer_point(x))
    return 16 * (P.n + m + 1)


def is_basic_triangle(P: ConvexPolygon) -> bool:
    if P.n != 3 or not P.is_integer or not P.has_origin_inside:
        return False
    if area(P) != Fraction(3, 2):
        return False
    v = P.vertices
    return all(abs(cross(v[a], v[b])) == 1 for a, b in ((0, 1), (1, 2), (2, 0)))


def _certificate(start, steps, log) -> DescentCertificate:
    terminal = steps[-1].end if steps else start
    minimal = is_basic_triangle(terminal) and all(s.vd.slope == 0 for s in steps)
    return DescentCertificate(start, tuple(steps), terminal, area(terminal), minimal, tuple(log))


def descend(P: ConvexPolygon, strategy: str = "deterministic", step_budget: Optional[int] = None):
    """Run the descent.

    ``strategy="deterministic"`` returns one :class:`DescentCertificate`;
    ``strategy="all-paths"`` returns a list of certificates, one per path.
    """
    _require_unavoidable(P)
    budget = default_budget(P) if step_budget is None else step_budget
    if strategy == "deterministic":
        return _descend_one(P, budget)
    if strategy == "all-paths":
        return _descend_all(P, budget)
    raise ValueError(f"unknown strategy {strategy!r}")


def _check_step(step: DeformationStep):
    before, after = _type_unchecked(step.start), _type_unchecked(step.end)
    if not after < before:
        raise EnumerationFailed(f"type did not decrease: {before} -> {after}")


def _descend_one(P: ConvexPolygon, budget: int) -> DescentCertificate:
    steps, log = [], ["strategy: deterministic (weight-1 vertices first, then smallest vertex)"]
    current = P
    while True:
        vds = _virtual_deformations(current)
        if not vds:
            return _certificate(P, steps, log)
        if len(steps) >= budget:
            raise StepBudgetExceeded(f"descent exceeded {budget} steps")
        vd = _choose(vds)
        step = _step(current, vd)
        _check_step(step)
        steps.append(step)
        log.append(_describe(vd, step))
        current = step.end


def _descend_all(P: ConvexPolygon, budget: int, max_paths: int = 256) -> list:
    """Every path through deformations of maximal-weight vertices.

    Deforming a weight-0 vertex while a weight-1 vertex exists need not lower
    the type, so only vertices of maximal weight branch.
    """
    results = []
    memo = {}

    def successors(Q):
        if Q not in memo:
            vds = _virtual_deformations(Q)
            top = max((vd.kind == "weight1" for vd in vds), default=False)
            memo[Q] = [_step(Q, vd) for vd in vds if (vd.kind == "weight1") == top]
        return memo[Q]

    def walk(Q, steps):
        if len(results) >= max_paths:
            return
        nxt = successors(Q)
        if not nxt:
            log = ["strategy: all-paths"] + [_describe(s.vd, s) for s in steps]
            results.append(_certificate(P, steps, log))
            return
        if len(steps) >= budget:
            raise StepBudgetExceeded(f"descent exceeded {budget} steps")
        for step in nxt:
            _check_step(step)
            walk(step.end, steps + [step])

    walk(P, [])
    return results
