"""Deterministic SVG pictures of bodies, integer lines and descent traces.

Output is byte-stable: coordinates use fixed precision, attributes are
written in sorted order and nothing depends on the clock or locale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .descent import DescentCertificate
from .geometry import ConvexPolygon

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


@dataclass(frozen=True)
class Scene:
    body: Optional[ConvexPolygon] = None
    max_coeff: int = 0  # draw lines m x + n y = 1 with |m|, |n| <= max_coeff; 0 draws none
    trace: Optional[DescentCertificate] = None
    bounds: tuple = (-3, 3, -3, 3)  # xmin, xmax, ymin, ymax
    size: int = 480
    precision: int = 3


def _num(x, precision: int) -> str:
    s = f"{float(x):.{precision}f}"
    if s.startswith("-") and float(s) == 0:
        s = s[1:]
    return s


def _element(tag: str, attrs: dict, content: str = "") -> str:
    parts = " ".join(f'{k}="{escape(str(attrs[k]), {chr(34): "&quot;"})}"' for k in sorted(attrs))
    if content:
        return f"<{tag} {parts}>{content}</{tag}>"
    return f"<{tag} {parts}/>"


def _clip_line(m: int, n: int, box) -> Optional[tuple]:
    """Endpoints of ``m x + n y = 1`` inside the box, exactly, or None."""
    xmin, xmax, ymin, ymax = (Fraction(b) for b in box)
    pts = set()
    if n != 0:
        for x in (xmin, xmax):
            y = (1 - m * x) / n
            if ymin <= y <= ymax:
                pts.add((x, y))
    if m != 0:
        for y in (ymin, ymax):
            x = (1 - n * y) / m
            if xmin <= x <= xmax:
                pts.add((x, y))
    if len(pts) < 2:
        return None
    pts = sorted(pts)
    return pts[0], pts[-1]


class _Canvas:
    def __init__(self, scene: Scene):
        self.scene = scene
        xmin, xmax, ymin, ymax = (Fraction(b) for b in scene.bounds)
        if not (xmin < xmax and ymin < ymax):
            raise ValueError("bounds must satisfy xmin < xmax and ymin < ymax")
        self.box = (xmin, xmax, ymin, ymax)
        self.scale = Fraction(scene.size) / max(xmax - xmin, ymax - ymin)
        self.width = (xmax - xmin) * self.scale
        self.height = (ymax - ymin) * self.scale

    def fmt(self, v) -> str:
        return _num(v, self.scene.precision)

    def map(self, p):
        xmin, _, _, ymax = self.box
        return ((p[0] - xmin) * self.scale, (ymax - p[1]) * self.scale)

    def points(self, P: ConvexPolygon) -> str:
        return " ".join(f"{self.fmt(x)},{self.fmt(y)}" for x, y in (self.map(p) for p in P.vertices))


def _lines(c: _Canvas, M: int) -> list:
    out = []
    for m in range(-M, M + 1):
        for n in range(-M, M + 1):
            if m == 0 and n == 0:
                continue
            seg = _clip_line(m, n, c.box)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = (c.map(p) for p in seg)
            out.append(_element("line", {
                "class": "integer-line", "data-m": m, "data-n": n,
                "x1": c.fmt(x1), "y1": c.fmt(y1), "x2": c.fmt(x2), "y2": c.fmt(y2),
            }))
    return out


def _axes(c: _Canvas) -> list:
    xmin, xmax, ymin, ymax = c.box
    out = []
    if ymin <= 0 <= ymax:
        (x1, y1), (x2, y2) = c.map((xmin, 0)), c.map((xmax, 0))
        out.append(_element("line", {"class": "axis", "x1": c.fmt(x1), "y1": c.fmt(y1), "x2": c.fmt(x2), "y2": c.fmt(y2)}))
    if xmin <= 0 <= xmax:
        (x1, y1), (x2, y2) = c.map((0, ymin)), c.map((0, ymax))
        out.append(_element("line", {"class": "axis", "x1": c.fmt(x1), "y1": c.fmt(y1), "x2": c.fmt(x2), "y2": c.fmt(y2)}))
    return out


def _trace(c: _Canvas, cert: DescentCertificate) -> list:
    polys = [cert.start] + [s.end for s in cert.steps]
    out = []
    for k, P in enumerate(polys):
        colour = _PALETTE[k % len(_PALETTE)]
        label = "start" if k == 0 else f"step {k}"
        shape = _element("polygon", {"class": "frame", "fill": "none", "points": c.points(P), "stroke": colour})
        lx, ly = c.map(P.vertices[0])
        text = _element("text", {"class": "label", "fill": colour, "x": c.fmt(lx + 4), "y": c.fmt(ly - 4)}, escape(label))
        out.append(_element("g", {"id": f"frame-{k}"}, shape + text))
        if k < len(cert.steps):
            s = cert.steps[k]
            (x1, y1), (x2, y2) = c.map(s.vd.vertex), c.map(_moved(s))
            out.append(_element("line", {
                "class": "slide", "stroke": colour,
                "x1": c.fmt(x1), "y1": c.fmt(y1), "x2": c.fmt(x2), "y2": c.fmt(y2),
            }))
    return out


def _moved(step):
    x, d = step.vd.vertex, step.vd.direction
    return (x[0] + step.T * d[0], x[1] + step.T * d[1])


_STYLE = (
    ".axis{stroke:#999999;stroke-width:0.75}"
    ".integer-line{stroke:#bbbbbb;stroke-width:0.5}"
    ".body{fill:#1f77b4;fill-opacity:0.25;stroke:#1f77b4;stroke-width:1.5}"
    ".frame{stroke-width:1.25}"
    ".slide{stroke-dasharray:3,2;stroke-width:1}"
    ".label{font-family:monospace;font-size:10px}"
    ".lattice{fill:#333333}"
)


def render_svg_string(scene: Scene) -> str:
    c = _Canvas(scene)
    body = []
    body.extend(_axes(c))
    body.extend(_lines(c, scene.max_coeff))
    xmin, xmax, ymin, ymax = c.box
    for x in range(math.ceil(xmin), math.floor(xmax) + 1):
        for y in range(math.ceil(ymin), math.floor(ymax) + 1):
            px, py = c.map((x, y))
            body.append(_element("circle", {"class": "lattice", "cx": c.fmt(px), "cy": c.fmt(py), "r": "1.5"}))
    if scene.body is not None:
        body.append(_element("polygon", {"class": "body", "points": c.points(scene.body)}))
    if scene.trace is not None:
        body.extend(_trace(c, scene.trace))
    header = _element("svg", {
        "height": c.fmt(c.height), "version": "1.1", "viewBox": f"0 0 {c.fmt(c.width)} {c.fmt(c.height)}",
        "width": c.fmt(c.width), "xmlns": "http://www.w3.org/2000/svg",
    })[:-2] + ">"
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', header, f"<style>{_STYLE}</style>"]
    lines.extend(body)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(scene: Scene, path: Optional[str] = None) -> str:
    """Render ``scene``; also write it to ``path`` when given."""
    text = render_svg_string(scene)
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text


def auto_bounds(polys: Sequence[ConvexPolygon], margin=1) -> tuple:
    xs = [p[0] for P in polys for p in P.vertices]
    ys = [p[1] for P in polys for p in P.vertices]
    return (math.floor(min(xs)) - margin, math.ceil(max(xs)) + margin,
            math.floor(min(ys)) - margin, math.ceil(max(ys)) + margin)


__all__ = ["Scene", "auto_bounds", "render_svg", "render_svg_string"]
