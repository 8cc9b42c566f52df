"""Affine and linear invariants of planar convex bodies, checked against their
classical bounds.

Exact rational quantities are compared exactly.  Quantities involving pi are
compared against a certified rational enclosure of pi; quantities involving a
critical determinant are numeric and compared with a tolerance.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .critical import critical_lattice_symmetric
from .descent import is_basic_triangle
from .errors import OriginNotInterior
from .geometry import ConvexPolygon, area, difference_body, polar_dual
from .lattice import is_unavoidable

# pi truncated to 50 decimals, and the same plus one unit in the last place.
# Digits from the standard expansion 3.14159 26535 89793 23846 26433 83279
# 50288 41971 69399 37510 58209...; checked against mpmath in the test suite.
PI_LO = Fraction("3.14159265358979323846264338327950288419716939937510")
PI_HI = PI_LO + Fraction(1, 10**50)

DEFAULT_TOL = 1e-6

Number = Union[Fraction, float]


@dataclass(frozen=True)
class InvariantEntry:
    name: str
    value: Optional[Number]
    bound: str
    status: str  # "pass", "fail" or "not-applicable"
    equality: bool = False
    note: str = ""

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)


@dataclass(frozen=True)
class InvariantReport:
    entries: tuple
    body_digest: str

    @property
    def passed(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def __getitem__(self, name: str) -> InvariantEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self):
        return [e.name for e in self.entries]


def body_digest(P: ConvexPolygon) -> str:
    text = ";".join(f"{x},{y}" for x, y in P.vertices)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def mahler_product(P: ConvexPolygon) -> Fraction:
    if not P.has_origin_inside:
        raise OriginNotInterior("the volume product needs the origin in the interior")
    return area(P) * area(polar_dual(P))


def dual_functional(F: Callable[[ConvexPolygon], Fraction], P: ConvexPolygon) -> Fraction:
    """The functional ``F*`` with ``F*(K) F(K*) = |K||K*|``."""
    return mahler_product(P) / F(polar_dual(P))


def rogers_shephard_ratio(P: ConvexPolygon) -> Fraction:
    return area(difference_body(P)) / area(P)


def santalo_kuperberg_check(P: ConvexPolygon) -> InvariantEntry:
    """``pi^2/2 < |K-K||(K-K)*| <= pi^2``, decided against the pi enclosure."""
    s = mahler_product(difference_body(P))
    lower_ok = s > PI_HI * PI_HI / 2
    upper_ok = s <= PI_LO * PI_LO
    return InvariantEntry("santalo_kuperberg", s, "pi^2/2 < s <= pi^2", _status(lower_ok and upper_ok))


def _delta(body: ConvexPolygon, tol: float) -> float:
    return critical_lattice_symmetric(body, tol)[1]


def packing_density(P: ConvexPolygon, tol: float = DEFAULT_TOL) -> float:
    """Density of the densest lattice packing of translates of ``P``."""
    return float(area(P)) / _delta(difference_body(P), tol)


def covering_rho(P: ConvexPolygon, tol: float = DEFAULT_TOL) -> float:
    """``|K| * Delta((K-K)*)``."""
    return float(area(P)) * _delta(polar_dual(difference_body(P)), tol)


def q_symmetrized(P: ConvexPolygon, tol: float = DEFAULT_TOL) -> float:
    """``Q(K-K) = |K-K| / Delta(K-K)``."""
    D = difference_body(P)
    return float(area(D)) / _delta(D, tol)


@dataclass(frozen=True)
class VolumeConstants:
    n: int
    lower: float  # (pi/8)^n (n+1)/n!, proven lower bound for unavoidable bodies
    conjectured: Fraction  # (n+1)/n!, the volume of the basic simplex
    c: float
    mahler_lower: float  # (c/e)^n (n+1)^(n+1)/(n!)^2


def theorem2_constant(n: int, c: Optional[float] = None) -> VolumeConstants:
    if n < 1:
        raise ValueError("dimension must be at least 1")
    c = math.pi / 8 if c is None else c
    fact = math.factorial(n)
    return VolumeConstants(
        n=n,
        lower=(math.pi / 8) ** n * (n + 1) / fact,
        conjectured=Fraction(n + 1, fact),
        c=c,
        mahler_lower=(c / math.e) ** n * (n + 1) ** (n + 1) / fact**2,
    )


def _na(name, bound, note) -> InvariantEntry:
    return InvariantEntry(name, None, bound, "not-applicable", note=note)


def inequality_battery(P: ConvexPolygon, numeric: bool = True, tol: float = DEFAULT_TOL) -> InvariantReport:
    """Every applicable check on ``P``.

    Checks depending on a critical determinant run only with ``numeric=True``.
    Chains involving ``Q*(K) = |K| Delta(K*)`` are instantiated at the integer
    lattice: for unavoidable ``K`` the lattice Z^2 is admissible for ``K*``, so
    ``Delta(K*) <= 1`` and ``Q*(K) <= |K|``.
    """
    out = []
    origin = P.has_origin_inside
    unavoidable = is_unavoidable(P).unavoidable
    A = area(P)

    ratio = rogers_shephard_ratio(P)
    out.append(InvariantEntry(
        "rogers_shephard", ratio, "4 <= |K-K|/|K| <= 6", _status(4 <= ratio <= 6),
        equality=ratio in (4, 6),
        note="symmetric" if ratio == 4 else ("triangle" if ratio == 6 else ""),
    ))
    out.append(santalo_kuperberg_check(P))
    sym_product = mahler_product(difference_body(P))
    out.append(InvariantEntry(
        "mahler_difference_body", sym_product, "8 <= |K-K||(K-K)*|", _status(sym_product >= 8),
        equality=sym_product == 8,
    ))

    if origin:
        m = mahler_product(P)
        out.append(InvariantEntry("mahler", m, "27/4 <= |K||K*|", _status(m >= Fraction(27, 4)),
                                  equality=m == Fraction(27, 4)))
        if P.is_symmetric:
            out.append(InvariantEntry("mahler_symmetric", m, "8 <= |K||K*|", _status(m >= 8), equality=m == 8))
        else:
            out.append(_na("mahler_symmetric", "8 <= |K||K*|", "body is not 0-symmetric"))
        fstar = dual_functional(area, P)
        out.append(InvariantEntry("dual_functional_area", fstar, "area* = area", _status(fstar == A)))
    else:
        for name, bound in (("mahler", "27/4 <= |K||K*|"), ("mahler_symmetric", "8 <= |K||K*|"),
                            ("dual_functional_area", "area* = area")):
            out.append(_na(name, bound, "origin not interior"))

    if unavoidable:
        out.append(InvariantEntry("unavoidable_area", A, "3/2 <= |K|", _status(A >= Fraction(3, 2)),
                                  equality=A == Fraction(3, 2) and is_basic_triangle(P)))
        lower = theorem2_constant(2).lower
        out.append(InvariantEntry("volume_lower_bound", A, f"(pi/8)^2 * 3/2 < |K|", _status(float(A) > lower)))
    else:
        out.append(_na("unavoidable_area", "3/2 <= |K|", "body is avoidable"))
        out.append(_na("volume_lower_bound", "(pi/8)^2 * 3/2 < |K|", "body is avoidable"))
    if unavoidable and P.is_symmetric:
        out.append(InvariantEntry("unavoidable_symmetric_area", A, "2 <= |B|", _status(A >= 2),
                                  equality=A == 2, note="parallelogram" if A == 2 else ""))
    else:
        out.append(_na("unavoidable_symmetric_area", "2 <= |B|", "needs a symmetric unavoidable body"))

    if numeric:
        delta = packing_density(P, tol)
        out.append(InvariantEntry("packing_density", delta, "1/3 < delta <= 1",
                                  _status(1 / 3 < delta <= 1 + tol), equality=abs(delta - 1) <= tol))
        q = q_symmetrized(P, tol)
        out.append(InvariantEntry("q_difference_body", q, "2 < Q(K-K) <= 4", _status(2 < q <= 4 + tol),
                                  equality=abs(q - 4) <= tol))
        rho = covering_rho(P, tol)
        out.append(InvariantEntry("covering_rho", rho, "3/8 <= rho", _status(rho + tol >= 0.375),
                                  equality=abs(rho - 0.375) <= tol))
        if origin:
            out.append(InvariantEntry("rho_mahler_chain", 4 * rho, "4 rho < |K||K*|",
                                      _status(4 * rho < float(mahler_product(P)) + tol)))
        else:
            out.append(_na("rho_mahler_chain", "4 rho < |K||K*|", "origin not interior"))
        if unavoidable:
            out.append(InvariantEntry("rho_area_chain", 4 * rho, "4 rho <= |K| (Z^2 admissible for K*)",
                                      _status(4 * rho <= float(A) + tol)))
        else:
            out.append(_na("rho_area_chain", "4 rho <= |K|", "body is avoidable"))

    return InvariantReport(tuple(out), body_digest(P))


__all__ = [
    "DEFAULT_TOL",
    "InvariantEntry",
    "InvariantReport",
    "PI_HI",
    "PI_LO",
    "VolumeConstants",
    "body_digest",
    "covering_rho",
    "dual_functional",
    "inequality_battery",
    "mahler_product",
    "packing_density",
    "q_symmetrized",
    "rogers_shephard_ratio",
    "santalo_kuperberg_check",
    "theorem2_constant",
]
