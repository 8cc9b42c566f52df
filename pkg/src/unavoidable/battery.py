"""Seeded sweep of every inequality over random bodies.

A violation of any exact check here would contradict a theorem, so the
summary records each failing body for inspection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bodies import RandomBodySpec, random_body
from .descent import descend, is_basic_triangle
from .geometry import area
from .invariants import (
    DEFAULT_TOL,
    covering_rho,
    mahler_product,
    rogers_shephard_ratio,
    santalo_kuperberg_check,
    theorem2_constant,
)
from .lattice import is_unavoidable
from .torus import FlatTorusMetric, systolic_check


@dataclass(frozen=True)
class BatteryConfig:
    count: int = 100
    seed: int = 0
    numeric: bool = False
    tol: float = DEFAULT_TOL
    max_vertices: int = 12
    max_denominator: int = 64


@dataclass
class BatterySummary:
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, name: str, passed: bool, detail: str = ""):
        p, t = self.counts.get(name, (0, 0))
        self.counts[name] = (p + int(passed), t + 1)
        if not passed:
            self.violations.append(f"{name}: {detail}")

    def as_dict(self) -> dict:
        return {
            "counts": {k: {"passed": p, "total": t} for k, (p, t) in self.counts.items()},
            "violations": list(self.violations),
            "ok": self.ok,
        }


def _seed(base: int, family: int, k: int) -> int:
    return (base * 1_000_003 + k) * 8 + family


def _descent_ok(P) -> tuple:
    c = descend(P)
    areas = c.areas
    types = c.types
    ok = all(a >= b for a, b in zip(areas, areas[1:]))
    ok = ok and all(t2 < t1 for t1, t2 in zip(types, types[1:]))
    ok = ok and c.terminal.is_integer and is_unavoidable(c.terminal).unavoidable
    ok = ok and c.terminal_area >= Fraction(3, 2)
    if c.terminal_area == Fraction(3, 2):
        ok = ok and is_basic_triangle(c.terminal)
    return ok, c


def run_battery(config: BatteryConfig = BatteryConfig()) -> BatterySummary:
    summary = BatterySummary()
    lower2 = theorem2_constant(2).lower
    tol = config.tol

    def body(family, k, constraint):
        spec = RandomBodySpec(seed=_seed(config.seed, family, k), constraint=constraint,
                              max_vertices=config.max_vertices, max_denominator=config.max_denominator)
        return random_body(spec)

    for k in range(config.count):
        U = body(0, k, "unavoidable")
        ok, _ = _descent_ok(U)
        summary.record("descent", ok, repr(U))
        summary.record("unavoidable_area", area(U) >= Fraction(3, 2), repr(U))
        summary.record("volume_lower_bound", float(area(U)) > lower2, repr(U))

        P = body(1, k, "origin-interior")
        summary.record("mahler", mahler_product(P) >= Fraction(27, 4), repr(P))
        r = rogers_shephard_ratio(P)
        summary.record("rogers_shephard", 4 <= r <= 6, repr(P))
        summary.record("santalo_kuperberg", santalo_kuperberg_check(P).status == "pass", repr(P))
        summary.record("systolic_general", systolic_check(FlatTorusMetric(P)).defect_general.holds, repr(P))

        S = body(2, k, "symmetric")
        summary.record("mahler_symmetric", mahler_product(S) >= 8, repr(S))
        summary.record("rogers_shephard_symmetric", rogers_shephard_ratio(S) == 4, repr(S))
        rep = systolic_check(FlatTorusMetric(S))
        summary.record("systolic_reversible", rep.defect_general.holds and rep.defect_reversible.holds, repr(S))

        B = body(3, k, "symmetric-unavoidable")
        summary.record("unavoidable_symmetric_area", area(B) >= 2, repr(B))

        if config.numeric:
            rho = covering_rho(U, tol)
            summary.record("rho_lower", rho + tol >= 0.375, repr(U))
            summary.record("rho_area_chain", 4 * rho <= float(area(U)) + tol, repr(U))
    return summary


__all__ = ["BatteryConfig", "BatterySummary", "run_battery"]
