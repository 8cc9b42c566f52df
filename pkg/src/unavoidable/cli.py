"""Command-line interface.

Exit codes: 0 on success (including an "avoidable" verdict), 1 when a
mathematical check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import serialize as ser
from .battery import BatteryConfig, run_battery
from .bodies import CONSTRAINTS, BodyFile, RandomBodySpec, parse_body_file, random_body, serialize_body
from .critical import critical_lattice_symmetric, exact_admissible
from .descent import descend, is_basic_triangle
from .errors import EnumerationFailed, GeometryError, ParseError, StepBudgetExceeded, ToleranceNotReached
from .geometry import ConvexPolygon, SimplexN, area, basic_simplex, dual_simplex, polar_dual, simplex_volume
from .invariants import DEFAULT_TOL, inequality_battery
from .lattice import Z2, is_unavoidable, minkowski_witness, reduced_basis, unavoidable_simplex
from .svg import Scene, auto_bounds, render_svg
from .torus import FlatTorusMetric, bh_area, ht_area, systole, systolic_check, zoll_check

OK, CHECK_FAILED, USAGE = 0, 1, 2


@dataclass
class Result:
    text: str
    data: object
    code: int = OK


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- input helpers


def _read(path: Optional[str]) -> str:
    if path is None:
        raise UsageError("--input is required for this command")
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _body_file(args) -> BodyFile:
    return parse_body_file(_read(args.input))


def _polygon(args) -> ConvexPolygon:
    body = _body_file(args).body
    if not isinstance(body, ConvexPolygon):
        raise UsageError("this command needs a planar body (dim 2)")
    return body


def _simplex(args) -> SimplexN:
    body = _body_file(args).body
    if not isinstance(body, SimplexN):
        raise UsageError("this command needs a simplex body file (dim >= 3)")
    return body


def _tol(args) -> float:
    if args.tol is None:
        return DEFAULT_TOL
    try:
        t = Fraction(args.tol)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--tol must be a rational number, got {args.tol!r}") from None
    if t <= 0:
        raise UsageError("--tol must be positive")
    return float(t)


def _pts(P) -> str:
    return " ".join(f"({x}, {y})" for x, y in P.vertices)


# ---------------------------------------------------------------- commands


def cmd_dual(args) -> Result:
    D = polar_dual(_polygon(args))
    return Result(serialize_body(D).rstrip("\n"), {"dual": ser.polygon(D)})


def cmd_check_unavoidable(args) -> Result:
    c = is_unavoidable(_polygon(args))
    text = c.verdict
    if c.witness is not None:
        text += f"\nwitness: {c.witness.m}x + {c.witness.n}y = 1 misses the body"
    return Result(text, ser.avoidance(c))


def cmd_descend(args) -> Result:
    P = _polygon(args)
    out = descend(P, strategy=args.strategy, step_budget=args.step_budget)
    certs = out if isinstance(out, list) else [out]
    ok = all(c.terminal_area >= Fraction(3, 2) and c.terminal.is_integer for c in certs)
    ok = ok and all(is_basic_triangle(c.terminal) for c in certs if c.terminal_area == Fraction(3, 2))
    lines = []
    for k, c in enumerate(certs):
        if len(certs) > 1:
            lines.append(f"path {k}:")
        lines.extend(c.strategy_log)
        lines.append(f"steps: {len(c.steps)}")
        lines.append(f"terminal: {_pts(c.terminal)}")
        lines.append(f"terminal area: {c.terminal_area}")
        lines.append(f"basic triangle: {'yes' if is_basic_triangle(c.terminal) else 'no'}")
    data = [ser.certificate(c) for c in certs]
    return Result("\n".join(lines), data if isinstance(out, list) else data[0], OK if ok else CHECK_FAILED)


def cmd_invariants(args) -> Result:
    P = _polygon(args)
    r = inequality_battery(P, numeric=not args.exact_only, tol=_tol(args))
    lines = [f"body {r.body_digest}"]
    for e in r.entries:
        value = "-" if e.value is None else (str(e.value) if e.exact else ser.real(e.value))
        flag = " (equality)" if e.equality else ""
        note = f" [{e.note}]" if e.note else ""
        lines.append(f"{e.status:>14}  {e.name}: {value}  {e.bound}{flag}{note}")
    return Result("\n".join(lines), ser.invariant_report(r), OK if r.passed else CHECK_FAILED)


def cmd_critical_lattice(args) -> Result:
    P = _polygon(args)
    L, delta = critical_lattice_symmetric(P, _tol(args))
    admissible = exact_admissible(P, L)
    text = (
        f"delta ~ {ser.real(delta)}\nexact determinant: {L.det}\n"
        f"basis: ({L.b1[0]}, {L.b1[1]}), ({L.b2[0]}, {L.b2[1]})\nadmissible (exact): {admissible}"
    )
    data = {"delta": ser.real(delta), "lattice": ser.lattice(L), "admissible": admissible}
    return Result(text, data, OK if admissible else CHECK_FAILED)


def _metric(args) -> FlatTorusMetric:
    bf = _body_file(args)
    if not isinstance(bf.body, ConvexPolygon):
        raise UsageError("the unit ball must be planar")
    return FlatTorusMetric(bf.body, bf.lattice or Z2)


def cmd_torus(args) -> Result:
    M = _metric(args)
    what = args.torus_command
    if what == "systole":
        s = systole(M)
        return Result(f"systole: {s}", {"systole": ser.scalar(s)})
    if what == "ht-area":
        q = ht_area(M)
        return Result(f"Holmes-Thompson area: ({q})/pi", {"ht_area_times_pi": ser.scalar(q)})
    if what == "bh-area":
        q = bh_area(M)
        return Result(f"Busemann-Hausdorff area: ({q})*pi", {"bh_area_over_pi": ser.scalar(q)})
    if what == "zoll":
        z = zoll_check(M)
        return Result(f"zoll: {z}", {"zoll": z})
    r = systolic_check(M)
    g = r.defect_general
    lines = [
        f"systole: {r.systole}",
        f"Holmes-Thompson area: ({r.ht_area_times_pi})/pi",
        f"3 sys^2 <= 2 q: {g.lhs} <= {g.rhs} {'holds' if g.holds else 'FAILS'}{' (equality)' if g.equality else ''}",
    ]
    if r.defect_reversible is not None:
        v = r.defect_reversible
        lines.append(f"2 sys^2 <= q: {v.lhs} <= {v.rhs} {'holds' if v.holds else 'FAILS'}{' (equality)' if v.equality else ''}")
        lines.append(f"Busemann-Hausdorff area: ({r.bh_area_over_pi})*pi")
    if r.zoll is not None:
        lines.append(f"zoll: {r.zoll}")
    return Result("\n".join(lines), ser.systolic_report(r), OK if r.passed else CHECK_FAILED)


def cmd_reduce(args) -> Result:
    r = reduced_basis(_polygon(args))
    T = r.transform
    text = (
        f"basis: ({T.a}, {T.c}), ({T.b}, {T.d})\nlambda1 = {r.a1}\nlambda2 = {r.a2}\n"
        f"lambda1 * lambda2 * area = {r.product}"
    )
    ok = 2 <= r.product <= 4  # Minkowski's second theorem in the plane
    return Result(text, ser.reduced(r), OK if ok else CHECK_FAILED)


def cmd_minkowski(args) -> Result:
    P = _polygon(args)
    z = minkowski_witness(P)
    A = area(P)
    ok = z is not None or A < 4
    text = f"area: {A}\nwitness: {'none' if z is None else z}"
    return Result(text, {"area": ser.scalar(A), "witness": None if z is None else list(z)}, OK if ok else CHECK_FAILED)


def _simplex_text(S: SimplexN) -> str:
    return serialize_body(S).rstrip("\n")


def cmd_simplex(args) -> Result:
    what = args.simplex_command
    if what == "basic":
        if not args.dim:
            raise UsageError("simplex basic needs --dim")
        S = basic_simplex(args.dim)
        return Result(_simplex_text(S), {"simplex": [ser.point(v) for v in S.vertices]})
    if args.input is None and args.dim:
        S = basic_simplex(args.dim)
    else:
        S = _simplex(args)
    if S.dim > 4 and what == "verify":
        raise UsageError("verification is limited to dimension 4")
    if what == "dual":
        D = dual_simplex(S)
        return Result(_simplex_text(D), {"dual": [ser.point(v) for v in D.vertices]})
    unavoidable = unavoidable_simplex(S)
    vol = simplex_volume(S)
    bound = Fraction(S.dim + 1, math.factorial(S.dim))
    integer = all(c.denominator == 1 for v in S.vertices for c in v)
    ok = not (unavoidable and integer) or vol >= bound
    text = f"unavoidable: {unavoidable}\nvolume: {vol}\ninteger vertices: {integer}\nbasic bound: {bound}"
    data = {"unavoidable": unavoidable, "volume": ser.scalar(vol), "integer": integer, "bound": ser.scalar(bound)}
    return Result(text, data, OK if ok else CHECK_FAILED)


def cmd_random(args) -> Result:
    count = args.count or 1
    bodies = [
        random_body(RandomBodySpec(seed=args.seed + k, constraint=args.constraint,
                                   max_vertices=args.max_vertices, max_denominator=args.max_denominator))
        for k in range(count)
    ]
    if count == 1:
        return Result(serialize_body(bodies[0]).rstrip("\n"), {"dim": 2, "vertices": ser.polygon(bodies[0])})
    return Result("\n".join(_pts(P) for P in bodies), [ser.polygon(P) for P in bodies])


def cmd_render(args) -> Result:
    P = _polygon(args) if args.input else None
    trace = None
    if args.trace:
        if P is None:
            raise UsageError("--trace needs --input")
        trace = descend(P)
    polys = [P] if P is not None else []
    if trace is not None:
        polys += [s.end for s in trace.steps]
    bounds = auto_bounds(polys) if polys else (-3, 3, -3, 3)
    scene = Scene(body=None if trace else P, max_coeff=args.max_coeff, trace=trace, bounds=bounds)
    text = render_svg(scene)
    return Result(text.rstrip("\n"), {"svg": text})


def cmd_battery(args) -> Result:
    config = BatteryConfig(count=args.count or 100, seed=args.seed, numeric=args.numeric, tol=_tol(args))
    summary = run_battery(config)
    lines = [f"{name}: {passed}/{total}" for name, (passed, total) in summary.counts.items()]
    lines += [f"VIOLATION {v}" for v in summary.violations]
    lines.append("all checks passed" if summary.ok else "some checks FAILED")
    return Result("\n".join(lines), summary.as_dict(), OK if summary.ok else CHECK_FAILED)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="body file (JSON); '-' reads stdin")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--tol", help="tolerance for numeric quantities, as a rational (default 1e-6)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="unavoidable", description="Exact geometry of numbers in the plane.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("dual", cmd_dual, "polar dual body")
    add("check-unavoidable", cmd_check_unavoidable, "does the body meet every integer line?")
    p = add("descend", cmd_descend, "vertex-sliding descent to an integer polygon")
    p.add_argument("--strategy", choices=("deterministic", "all-paths"), default="deterministic")
    p.add_argument("--step-budget", type=int, default=None)
    p = add("invariants", cmd_invariants, "invariant battery for one body")
    p.add_argument("--exact-only", action="store_true", help="skip checks that need critical determinants")
    add("critical-lattice", cmd_critical_lattice, "critical determinant of a symmetric body")

    p = add("torus", cmd_torus, "flat Finsler torus with the given unit ball")
    p.add_argument("torus_command", choices=("systole", "ht-area", "bh-area", "check", "zoll"))

    add("reduce", cmd_reduce, "reduced basis of Z^2 for a symmetric norm")
    add("minkowski", cmd_minkowski, "nonzero lattice point of a symmetric body")

    p = add("simplex", cmd_simplex, "basic simplices")
    p.add_argument("simplex_command", choices=("basic", "dual", "verify"))
    p.add_argument("--dim", type=int, default=None)

    p = add("random", cmd_random, "seeded random body")
    p.add_argument("--constraint", choices=CONSTRAINTS, default="none")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--max-denominator", type=int, default=64)

    p = add("render", cmd_render, "SVG picture")
    p.add_argument("--max-coeff", type=int, default=4)
    p.add_argument("--trace", action="store_true", help="overlay the descent of the input body")

    p = add("battery", cmd_battery, "run every check on seeded random bodies")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--numeric", action="store_true", help="include critical-determinant checks")
    return parser


def _emit(result: Result, args) -> None:
    if args.format == "structured":
        out = ser.dumps(result.data)
    else:
        out = result.text + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (UsageError, ParseError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ToleranceNotReached, StepBudgetExceeded, EnumerationFailed) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED
    try:
        _emit(result, args)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return USAGE
    return result.code


if __name__ == "__main__":
    sys.exit(main())
