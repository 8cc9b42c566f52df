"""Trace the descent of the triangle (3/2, 0), (0, 1), (-1, -1) step by step.

Prints each step's direction, stopping time, event lines and areas, and
optionally writes the SVG trace.
"""

import argparse
from fractions import Fraction

from unavoidable.descent import descend
from unavoidable.geometry import polygon
from unavoidable.svg import Scene, auto_bounds, render_svg

START = polygon([(Fraction(3, 2), 0), (0, 1), (-1, -1)])


def fmt(P):
    return ", ".join(f"({x}, {y})" for x, y in P.vertices)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--svg", help="write the trace to this file")
    args = ap.parse_args(argv)

    cert = descend(START)
    print("start:", fmt(cert.start), "area", cert.areas[0], "type", cert.types[0])
    for k, s in enumerate(cert.steps, 1):
        lines = ", ".join(f"{L.m}x + {L.n}y = 1" for L in s.event_lines)
        print(f"step {k}: direction {s.vd.direction}, T = {s.T} ({s.event}), lines [{lines}]")
        print(f"        end {fmt(s.end)}, area {s.start_area} -> {s.end_area}, type {cert.types[k]}")
    print("terminal area:", cert.terminal_area)
    if args.svg:
        polys = [cert.start] + [s.end for s in cert.steps]
        render_svg(Scene(trace=cert, bounds=auto_bounds(polys)), args.svg)
        print("wrote", args.svg)


if __name__ == "__main__":
    main()
