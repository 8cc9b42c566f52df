"""Flat Finsler 2-tori: a norm ball (possibly asymmetric) modulo a lattice.

Closed geodesics of a flat torus are straight, so the systole is the least
gauge of a nonzero lattice vector.  Areas carrying a factor of pi are stored
as their exact rational coefficient: the Holmes-Thompson area is ``q / pi``
and the Busemann-Hausdorff area is ``q' * pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotReversible, OriginNotInterior, UnsupportedLattice
from .geometry import ConvexPolygon, area, is_integer_point, polar_dual
from .lattice import Z2, Lattice2, shortest_vector


@dataclass(frozen=True)
class FlatTorusMetric:
    ball: ConvexPolygon
    lattice: Lattice2 = Z2
    reversible: bool = field(init=False)

    def __post_init__(self):
        if not self.ball.has_origin_inside:
            raise OriginNotInterior("the unit ball must contain the origin in its interior")
        object.__setattr__(self, "reversible", self.ball.is_symmetric)


@dataclass(frozen=True)
class InequalityVerdict:
    """Exact comparison ``lhs <= rhs`` after clearing pi."""

    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def defect(self) -> Fraction:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class SystolicReport:
    systole: Fraction
    ht_area_times_pi: Fraction
    bh_area_over_pi: Fraction | None
    defect_general: InequalityVerdict  # 3 sys^2 <= 2 q
    defect_reversible: InequalityVerdict | None  # 2 sys^2 <= q, reversible metrics only
    zoll: bool | None  # None when the lattice is not Z^2

    @property
    def passed(self) -> bool:
        ok = self.defect_general.holds
        if self.defect_reversible is not None:
            ok = ok and self.defect_reversible.holds
        return ok


def systole(M: FlatTorusMetric) -> Fraction:
    return shortest_vector(M.ball, M.lattice)[1]


def ht_area(M: FlatTorusMetric) -> Fraction:
    """``q`` such that the Holmes-Thompson area equals ``q / pi``."""
    return area(polar_dual(M.ball)) * M.lattice.det


def bh_area(M: FlatTorusMetric) -> Fraction:
    """``q'`` such that the Busemann-Hausdorff area equals ``q' * pi``."""
    if not M.reversible:
        raise NotReversible("Busemann-Hausdorff area is only defined here for symmetric balls")
    return M.lattice.det / area(M.ball)


def _is_z2(L: Lattice2) -> bool:
    # the lattice itself is Z^2 iff its basis matrix is integral and unimodular
    return is_integer_point(L.b1) and is_integer_point(L.b2) and L.det == 1


def zoll_check(M: FlatTorusMetric) -> bool:
    """Every geodesic closes iff all vertices of the ball are primitive integer vectors."""
    if not _is_z2(M.lattice):
        raise UnsupportedLattice("the Zoll test is only available for the lattice Z^2")
    for v in M.ball.vertices:
        if not is_integer_point(v) or math.gcd(int(v[0]), int(v[1])) != 1:
            return False
    return True


def systolic_check(M: FlatTorusMetric) -> SystolicReport:
    s = systole(M)
    q = ht_area(M)
    general = InequalityVerdict(3 * s * s, 2 * q)
    reversible = InequalityVerdict(2 * s * s, q) if M.reversible else None
    return SystolicReport(
        systole=s,
        ht_area_times_pi=q,
        bh_area_over_pi=bh_area(M) if M.reversible else None,
        defect_general=general,
        defect_reversible=reversible,
        zoll=zoll_check(M) if _is_z2(M.lattice) else None,
    )


__all__ = [
    "FlatTorusMetric",
    "InequalityVerdict",
    "SystolicReport",
    "bh_area",
    "ht_area",
    "systole",
    "systolic_check",
    "zoll_check",
]
