"""Plain-data views of certificates and reports, for JSON output.

Rationals become strings; floating point values become strings with 12
significant digits.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .descent import DeformationStep, DescentCertificate
from .geometry import ConvexPolygon
from .invariants import InvariantReport
from .lattice import AvoidanceCertificate, IntegerLine, Lattice2, ReducedBasis2
from .torus import InequalityVerdict, SystolicReport


def real(x: float) -> str:
    return f"{x:.12g}"


def scalar(x):
    if x is None:
        return None
    if isinstance(x, bool):
        return x
    if isinstance(x, (Fraction, int)):
        return str(Fraction(x))
    if isinstance(x, float):
        return real(x)
    return x


def point(p) -> list:
    return [scalar(c) for c in p]


def polygon(P: ConvexPolygon) -> list:
    return [point(p) for p in P.vertices]


def line(L: IntegerLine) -> list:
    return [L.m, L.n]


def lattice(L: Lattice2) -> dict:
    return {"basis": [point(L.b1), point(L.b2)], "det": scalar(L.det)}


def avoidance(c: AvoidanceCertificate) -> dict:
    return {
        "verdict": c.verdict,
        "witness": line(c.witness) if c.witness else None,
        "missed_lines": [list(z) for z in c.dual_interior_points],
    }


def step(s: DeformationStep) -> dict:
    return {
        "vertex": point(s.vd.vertex),
        "kind": s.vd.kind,
        "direction": list(s.vd.direction),
        "slope": scalar(s.vd.slope),
        "tau_plus": scalar(s.tau_plus) if s.tau_plus is not None else "inf",
        "t_origin": scalar(s.t_origin) if s.t_origin is not None else "inf",
        "T": scalar(s.T),
        "event": s.event,
        "event_lines": [line(L) for L in s.event_lines],
        "end": polygon(s.end),
        "area_before": scalar(s.start_area),
        "area_after": scalar(s.end_area),
    }


def certificate(c: DescentCertificate) -> dict:
    return {
        "start": polygon(c.start),
        "steps": [step(s) for s in c.steps],
        "terminal": polygon(c.terminal),
        "terminal_area": scalar(c.terminal_area),
        "is_minimal": c.is_minimal,
        "types": [[t.n, t.m, t.k] for t in c.types],
        "strategy_log": list(c.strategy_log),
    }


def invariant_report(r: InvariantReport) -> dict:
    return {
        "body_digest": r.body_digest,
        "passed": r.passed,
        "entries": [
            {
                "name": e.name,
                "value": scalar(e.value),
                "exact": e.exact,
                "bound": e.bound,
                "status": e.status,
                "equality": e.equality,
                "note": e.note,
            }
            for e in r.entries
        ],
    }


def verdict(v: InequalityVerdict | None):
    if v is None:
        return None
    return {"lhs": scalar(v.lhs), "rhs": scalar(v.rhs), "holds": v.holds, "equality": v.equality}


def systolic_report(r: SystolicReport) -> dict:
    return {
        "systole": scalar(r.systole),
        "ht_area_times_pi": scalar(r.ht_area_times_pi),
        "bh_area_over_pi": scalar(r.bh_area_over_pi),
        "general": verdict(r.defect_general),
        "reversible": verdict(r.defect_reversible),
        "zoll": r.zoll,
        "passed": r.passed,
    }


def reduced(r: ReducedBasis2) -> dict:
    T = r.transform
    return {
        "basis": [[scalar(T.a), scalar(T.c)], [scalar(T.b), scalar(T.d)]],
        "lambda1": scalar(r.a1),
        "lambda2": scalar(r.a2),
        "product_with_area": scalar(r.product),
    }


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
